#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewschur/bench.hpp"
#include "skewschur/determinantal.hpp"
#include "skewschur/garnir.hpp"
#include "skewschur/json_io.hpp"
#include "skewschur/rearrange.hpp"
#include "skewschur/straighten.hpp"
#include "skewschur/sweeps.hpp"
#include "skewschur/verify.hpp"

namespace {

using nlohmann::json;
using namespace skewschur;

// Arguments may be file paths or inline JSON text.
json loadJson(const std::string& arg) {
    size_t k = arg.find_first_not_of(" \t\n");
    if (k != std::string::npos &&
        (arg[k] == '{' || arg[k] == '[' || (arg[k] >= '0' && arg[k] <= '9')))
        return parseJsonText(arg);
    return parseJsonFile(arg);
}

void emit(const json& j, const std::string& outPath) {
    std::string text = j.dump(2) + "\n";
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outPath);
        if (!out) throw BadInput("cannot write " + outPath);
        out << text;
    }
}

RcoeffEngine parseEngine(const std::string& name) {
    if (name == "backtracking") return RcoeffEngine::Backtracking;
    if (name == "polynomial") return RcoeffEngine::Polynomial;
    throw BadInput("unknown engine: " + name);
}

json matrixToJson(const IntMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const Int& v : row) r.push_back(v.convert_to<std::int64_t>());
        rows.push_back(std::move(r));
    }
    return rows;
}

int cmdSsyt(const std::string& shapeArg, const std::string& contentArg,
            int alphabet, const std::string& outPath) {
    ShapePtr shape = shapeFromJson(loadJson(shapeArg));
    Content z = contentFromJson(loadJson(contentArg));
    int m = std::max(alphabet, static_cast<int>(z.size()));
    if (m < 1) m = 1;
    int total = 0;
    for (int v : z) total += v;
    if (total != shape->size())
        throw BadInput("content total does not match the number of cells");
    json tableaux = json::array();
    TableauSetPtr ts = enumerateSSYT(shape, z, m);
    for (const Filling& t : ts->tableaux()) tableaux.push_back(rowsToJson(t));
    emit({{"schemaVersion", kSchemaVersion},
          {"shape", shapeToJson(*shape)},
          {"content", z},
          {"tableaux", std::move(tableaux)}},
         outPath);
    return 0;
}

int cmdStraighten(const std::string& fillingArg, const std::string& method,
                  const std::string& basisName, const std::string& engineName,
                  const std::string& outPath) {
    Filling f = fillingFromJson(loadJson(fillingArg));
    if (method != "noniterative" && method != "iterative" && method != "both")
        throw BadInput("unknown method: " + method);
    if (basisName != "ssyt" && basisName != "d")
        throw BadInput("unknown basis: " + basisName);
    BasisKind basis = basisName == "d" ? BasisKind::D : BasisKind::Ssyt;
    RcoeffEngine engine = parseEngine(engineName);

    TableauSetPtr context = contextFor(f);
    bool needDBasis =
        method != "iterative" || basis == BasisKind::D;
    std::optional<DBasis> db;
    if (needDBasis && context->size() > 0) db.emplace(DBasis::build(context, engine));

    auto inBasis = [&](Expansion e) {
        if (e.isZero()) {
            e.basis = basis;
            return e;
        }
        if (e.basis == basis || !db) return e;
        return convert(e, basis, *db);
    };

    Expansion result;
    if (method == "iterative") {
        result = inBasis(iterativeStraighten(f, context));
    } else {
        result = inBasis(straightenNonIterative(f, context, engine));
        if (method == "both") {
            Expansion oracle = inBasis(iterativeStraighten(f, context));
            if (!(oracle == result)) {
                json diff = {{"schemaVersion", kSchemaVersion},
                             {"error", "methods disagree"},
                             {"noniterative", expansionToJson(result)},
                             {"iterative", expansionToJson(oracle)}};
                std::cerr << diff.dump(2) << "\n";
                return 1;
            }
        }
    }

    json out = {{"schemaVersion", kSchemaVersion},
                {"filling", fillingToJson(f)},
                {"method", method}};
    json exp = expansionToJson(result);
    out["basis"] = exp["basis"];
    out["coeffs"] = exp["coeffs"];
    ColsortResult cs = colsort(f);
    if (cs.hasColumnDuplicate) out["note"] = "zero element";
    emit(out, outPath);
    return 0;
}

int cmdRcoeff(const std::string& fillingArg, const std::string& tableauArg,
              const std::string& engineName, const std::string& outPath) {
    Filling f = fillingFromJson(loadJson(fillingArg));
    Filling s = fillingFromJson(loadJson(tableauArg));
    int m = std::max(f.alphabet(), s.alphabet());
    f = Filling(f.shapePtr(), f.entries(), m);
    s = Filling(s.shapePtr(), s.entries(), m);
    if (!(f.shape() == s.shape()))
        throw BadInput("filling and tableau have different shapes");
    Int r = rearrangementCoefficient(f, s, parseEngine(engineName));
    if (outPath.empty()) {
        std::cout << r.str() << "\n";
    } else {
        std::ofstream out(outPath);
        if (!out) throw BadInput("cannot write " + outPath);
        out << r.str() << "\n";
    }
    return 0;
}

int cmdDpoly(const std::string& fillingArg, const std::string& outPath) {
    Filling f = fillingFromJson(loadJson(fillingArg));
    SparsePoly d = dPoly(f);
    emit({{"schemaVersion", kSchemaVersion},
          {"filling", fillingToJson(f)},
          {"terms", d.termCount()},
          {"poly", d.str()}},
         outPath);
    return 0;
}

int cmdDbasis(const std::string& shapeArg, const std::string& contentArg,
              const std::string& engineName, const std::string& outPath) {
    ShapePtr shape = shapeFromJson(loadJson(shapeArg));
    Content z = contentFromJson(loadJson(contentArg));
    int m = std::max(1, static_cast<int>(z.size()));
    TableauSetPtr ts = enumerateSSYT(shape, z, m);
    DBasis db = DBasis::build(ts, parseEngine(engineName));
    json tableaux = json::array();
    for (const Filling& t : ts->tableaux()) tableaux.push_back(rowsToJson(t));
    emit({{"schemaVersion", kSchemaVersion},
          {"shape", shapeToJson(*shape)},
          {"content", z},
          {"tableaux", std::move(tableaux)},
          {"rcoeff", matrixToJson(db.rcoeffMatrix())},
          {"toSsyt", matrixToJson(db.toSsyt())}},
         outPath);
    return 0;
}

json reportToJson(const SuiteReport& r) {
    return {{"suite", r.name},
            {"instances", r.instances},
            {"failures", r.failures},
            {"ok", r.ok()}};
}

int cmdVerify(const std::string& suite, int sizeBound, int letters, int instances,
              std::uint64_t seed, const std::string& outPath) {
    std::vector<SuiteReport> reports;
    bool all = suite == "all";
    if (all || suite == "garnir-identity")
        reports.push_back(verifyGarnirIdentitySuite(sizeBound, instances, seed));
    if (all || suite == "gram")
        reports.push_back(verifyGramSuite(sizeBound, letters));
    if (all || suite == "equivalence")
        reports.push_back(verifyEquivalenceSuite(sizeBound, letters));
    if (all || suite == "leading-monomial")
        reports.push_back(verifyLeadingMonomialSuite(sizeBound));
    if (all || suite == "engine-agreement")
        reports.push_back(verifyEngineAgreementSuite(sizeBound, letters));
    if (reports.empty()) throw BadInput("unknown suite: " + suite);
    json out = {{"schemaVersion", kSchemaVersion}, {"reports", json::array()}};
    bool ok = true;
    for (const SuiteReport& r : reports) {
        out["reports"].push_back(reportToJson(r));
        ok = ok && r.ok();
    }
    out["ok"] = ok;
    emit(out, outPath);
    return ok ? 0 : 1;
}

int cmdBench(int repetitions, int alphabet, std::uint64_t seed,
             const std::string& outPath) {
    std::vector<BenchRow> rows = runBench(defaultBenchFamily(), alphabet,
                                          repetitions, seed);
    json jrows = json::array();
    for (const BenchRow& r : rows)
        jrows.push_back({{"shape", r.shape},
                         {"cells", r.cells},
                         {"repetitions", r.repetitions},
                         {"medianIterativeMs", r.medianIterativeMs},
                         {"medianNonIterativeMs", r.medianNonIterativeMs},
                         {"iterativePeakTerms", r.iterativePeakTerms},
                         {"iterativeRewrites", r.iterativeRewrites}});
    std::cerr << benchTable(rows);
    emit({{"schemaVersion", kSchemaVersion}, {"rows", std::move(jrows)}}, outPath);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew Schur module straightening toolkit"};
    app.require_subcommand(1);

    std::string shapeArg, contentArg, fillingArg, tableauArg, outPath;
    std::string method = "noniterative", basis = "ssyt", engine = "backtracking";
    std::string suite = "all";
    int alphabet = 0, sizeBound = 4, letters = 3, instances = 200;
    int repetitions = 5;
    std::uint64_t seed = 1;

    CLI::App* ssyt = app.add_subcommand("ssyt", "enumerate SSYT of a shape and content");
    ssyt->add_option("--shape", shapeArg)->required();
    ssyt->add_option("--content", contentArg)->required();
    ssyt->add_option("--alphabet", alphabet);
    ssyt->add_option("--out", outPath);

    CLI::App* straighten = app.add_subcommand("straighten", "expand a filling in a basis");
    straighten->add_option("--filling", fillingArg)->required();
    straighten->add_option("--method", method);
    straighten->add_option("--basis", basis);
    straighten->add_option("--engine", engine);
    straighten->add_option("--out", outPath);

    CLI::App* rcoeff = app.add_subcommand("rcoeff", "rearrangement coefficient");
    rcoeff->add_option("--filling", fillingArg)->required();
    rcoeff->add_option("--tableau", tableauArg)->required();
    rcoeff->add_option("--engine", engine);
    rcoeff->add_option("--out", outPath);

    CLI::App* dpoly = app.add_subcommand("dpoly", "column determinant product");
    dpoly->add_option("--filling", fillingArg)->required();
    dpoly->add_option("--out", outPath);

    CLI::App* dbasis = app.add_subcommand("dbasis", "D-basis transition matrices");
    dbasis->add_option("--shape", shapeArg)->required();
    dbasis->add_option("--content", contentArg)->required();
    dbasis->add_option("--engine", engine);
    dbasis->add_option("--out", outPath);

    CLI::App* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", suite);
    verify->add_option("--size-bound", sizeBound);
    verify->add_option("--letters", letters);
    verify->add_option("--instances", instances);
    verify->add_option("--seed", seed);
    verify->add_option("--out", outPath);

    CLI::App* bench = app.add_subcommand("bench", "iterative vs non-iterative timing");
    bench->add_option("--reps", repetitions);
    bench->add_option("--alphabet", alphabet);
    bench->add_option("--seed", seed);
    bench->add_option("--out", outPath);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ssyt->parsed()) return cmdSsyt(shapeArg, contentArg, alphabet, outPath);
        if (straighten->parsed())
            return cmdStraighten(fillingArg, method, basis, engine, outPath);
        if (rcoeff->parsed()) return cmdRcoeff(fillingArg, tableauArg, engine, outPath);
        if (dpoly->parsed()) return cmdDpoly(fillingArg, outPath);
        if (dbasis->parsed()) return cmdDbasis(shapeArg, contentArg, engine, outPath);
        if (verify->parsed())
            return cmdVerify(suite, sizeBound, letters, instances, seed, outPath);
        if (bench->parsed()) return cmdBench(repetitions, alphabet, seed, outPath);
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
