#include "skewschur/verify.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "skewschur/determinantal.hpp"
#include "skewschur/garnir.hpp"
#include "skewschur/straighten.hpp"
#include "skewschur/sweeps.hpp"

namespace skewschur {

namespace {

std::string describeShape(const SkewShape& sh) {
    std::ostringstream out;
    out << "(";
    for (int i = 1; i <= sh.lambda().length(); ++i)
        out << (i > 1 ? "," : "") << sh.lambda().part(i);
    out << ")/(";
    for (int i = 1; i <= sh.mu().length(); ++i)
        out << (i > 1 ? "," : "") << sh.mu().part(i);
    out << ")";
    return out.str();
}

std::string describeFilling(const Filling& f) {
    std::ostringstream out;
    out << describeShape(f.shape()) << " [";
    for (size_t i = 0; i < f.entries().size(); ++i)
        out << (i > 0 ? "," : "") << f.entries()[i];
    out << "]";
    return out.str();
}

// DBasis instances are shared across the fillings of one context.
class DBasisCache {
public:
    const DBasis& get(const TableauSetPtr& context) {
        Key key{context->shape().lambda().parts(), context->shape().mu().parts(),
                context->content()};
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(std::move(key),
                                std::make_unique<DBasis>(DBasis::build(context)))
                     .first;
        return *it->second;
    }

private:
    using Key = std::tuple<std::vector<int>, std::vector<int>, Content>;
    std::map<Key, std::unique_ptr<DBasis>> cache_;
};

}  // namespace

SuiteReport verifyGarnirIdentitySuite(int maxCells, int instances,
                                      std::uint64_t seed) {
    SuiteReport report{"garnir-identity", 0, {}};
    std::vector<ShapePtr> shapes;
    std::vector<std::vector<GarnirData>> data;
    for (ShapePtr& sh : skewShapesUpTo(maxCells)) {
        std::vector<GarnirData> adm = admissibleData(*sh);
        if (adm.empty()) continue;
        shapes.push_back(std::move(sh));
        data.push_back(std::move(adm));
    }
    Rng rng(seed);
    for (int k = 0; k < instances; ++k) {
        size_t s = static_cast<size_t>(
            rng.next(0, static_cast<int>(shapes.size()) - 1));
        const ShapePtr& shape = shapes[s];
        Filling f = randomFilling(shape, shape->size(), rng);
        const GarnirData& g = data[s][static_cast<size_t>(
            rng.next(0, static_cast<int>(data[s].size()) - 1))];
        ++report.instances;
        if (!verifyGarnirDeterminantIdentity(f, g)) {
            std::ostringstream msg;
            msg << "nonzero orbit sum for " << describeFilling(f) << " g=(" << g.c1
                << "," << g.c2 << "," << g.a << "," << g.b << ")";
            report.failures.push_back(msg.str());
        }
    }
    return report;
}

SuiteReport verifyGramSuite(int maxCells, int maxLetters) {
    SuiteReport report{"gram", 0, {}};
    for (const ShapePtr& shape : skewShapesUpTo(maxCells))
        for (const Content& z : allContents(shape->size(), maxLetters)) {
            TableauSetPtr context = enumerateSSYT(shape, z, maxLetters);
            if (context->size() == 0) continue;
            ++report.instances;
            DBasis db = DBasis::build(context);
            if (!isIdentity(gramMatrix(db)))
                report.failures.push_back("gram matrix not identity at " +
                                          describeShape(*shape));
            if (!verifyGramSchmidt(db))
                report.failures.push_back("Gram-Schmidt mismatch at " +
                                          describeShape(*shape));
        }
    return report;
}

namespace {

void checkEquivalence(const Filling& f, DBasisCache& cache, SuiteReport& report,
                      bool alsoEngines) {
    TableauSetPtr context = contextFor(f);
    Expansion iter = iterativeStraighten(f, context);
    if (context->size() == 0) {
        if (!iter.isZero())
            report.failures.push_back("oracle nonzero on empty context " +
                                      describeFilling(f));
        ++report.instances;
        return;
    }
    const DBasis& db = cache.get(context);
    Expansion direct = straightenNonIterative(f, context);
    Expansion asSsyt = convert(direct, BasisKind::Ssyt, db);
    ++report.instances;
    if (!(asSsyt == iter))
        report.failures.push_back("method disagreement on " + describeFilling(f));
    if (alsoEngines) {
        std::vector<Int> bt = evaluationVector(f, *context, RcoeffEngine::Backtracking);
        std::vector<Int> poly = evaluationVector(f, *context, RcoeffEngine::Polynomial);
        if (bt != poly)
            report.failures.push_back("engine disagreement on " + describeFilling(f));
    }
}

}  // namespace

SuiteReport verifyEquivalenceSuite(int maxCells, int maxLetters,
                                   int randomInstances, int randomCells,
                                   int randomLetters, std::uint64_t seed) {
    SuiteReport report{"equivalence", 0, {}};
    DBasisCache cache;
    for (const ShapePtr& shape : skewShapesUpTo(maxCells))
        forEachFilling(shape, maxLetters, [&](const Filling& f) {
            checkEquivalence(f, cache, report, false);
        });
    if (randomInstances > 0) {
        std::vector<ShapePtr> shapes;
        for (ShapePtr& sh : skewShapesUpTo(randomCells))
            if (sh->size() == randomCells) shapes.push_back(std::move(sh));
        Rng rng(seed);
        for (int k = 0; k < randomInstances; ++k) {
            const ShapePtr& shape = shapes[static_cast<size_t>(
                rng.next(0, static_cast<int>(shapes.size()) - 1))];
            checkEquivalence(randomFilling(shape, randomLetters, rng), cache,
                             report, false);
        }
    }
    return report;
}

SuiteReport verifyLeadingMonomialSuite(int maxCells) {
    SuiteReport report{"leading-monomial", 0, {}};
    for (const ShapePtr& shape : skewShapesUpTo(maxCells)) {
        int m = shape->size();
        for (const Content& z : allContents(m, m)) {
            TableauSetPtr context = enumerateSSYT(shape, z, m);
            std::vector<Monomial> lead(static_cast<size_t>(context->size()));
            for (int i = 0; i < context->size(); ++i) {
                const Filling& t = context->tableau(i);
                auto [lm, lc] = dPoly(t).leadingTerm();
                ++report.instances;
                if (lc != 1 || !(lm == leadingMonomialOfSSYT(t)))
                    report.failures.push_back("leading term mismatch for " +
                                              describeFilling(t));
                lead[static_cast<size_t>(i)] = lm;
            }
            // Context order descends in reading word, so leading monomials
            // must strictly ascend with the index reversed: S_i > S_j in
            // reading order forces LM(D_{S_i}) < LM(D_{S_j}) for i < j.
            for (int i = 0; i + 1 < context->size(); ++i) {
                ++report.instances;
                if (compareMonomials(lead[static_cast<size_t>(i)],
                                     lead[static_cast<size_t>(i + 1)]) !=
                    std::strong_ordering::less)
                    report.failures.push_back("order incompatibility at " +
                                              describeShape(*shape));
            }
        }
    }
    return report;
}

SuiteReport verifyEngineAgreementSuite(int maxCells, int maxLetters) {
    SuiteReport report{"engine-agreement", 0, {}};
    std::map<std::tuple<std::vector<int>, std::vector<int>, Content>, TableauSetPtr>
        contexts;
    for (const ShapePtr& shape : skewShapesUpTo(maxCells))
        forEachFilling(shape, maxLetters, [&](const Filling& f) {
            auto key = std::make_tuple(shape->lambda().parts(), shape->mu().parts(),
                                       contentOf(f));
            auto it = contexts.find(key);
            if (it == contexts.end())
                it = contexts.emplace(key, contextFor(f)).first;
            ++report.instances;
            std::vector<Int> bt =
                evaluationVector(f, *it->second, RcoeffEngine::Backtracking);
            std::vector<Int> poly =
                evaluationVector(f, *it->second, RcoeffEngine::Polynomial);
            if (bt != poly)
                report.failures.push_back("engine disagreement on " +
                                          describeFilling(f));
        });
    return report;
}

}  // namespace skewschur
