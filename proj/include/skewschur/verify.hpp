#ifndef SKEWSCHUR_VERIFY_HPP
#define SKEWSCHUR_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace skewschur {

struct SuiteReport {
    std::string name;
    std::size_t instances = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Signed shuffle-orbit sums of dPoly vanish for random admissible Garnir
/// data on random fillings of shapes with |lambda/mu| <= maxCells.
SuiteReport verifyGarnirIdentitySuite(int maxCells, int instances,
                                      std::uint64_t seed);

/// gramMatrix is the identity and verifyGramSchmidt holds for every
/// (shape, content) with |lambda/mu| <= maxCells over alphabets <= maxLetters.
SuiteReport verifyGramSuite(int maxCells, int maxLetters);

/// Non-iterative straightening converted to the SSYT basis agrees with the
/// iterative oracle for every filling at the given scale; randomInstances
/// extra seeded draws at (randomCells, randomLetters) when positive.
SuiteReport verifyEquivalenceSuite(int maxCells, int maxLetters,
                                   int randomInstances = 0, int randomCells = 0,
                                   int randomLetters = 0, std::uint64_t seed = 0);

/// SSYT leading monomials are the diagonal products with coefficient 1, and
/// the reading order reverses the monomial order of the leading terms.
SuiteReport verifyLeadingMonomialSuite(int maxCells);

/// Backtracking and polynomial rearrangement coefficients agree on every
/// (filling, tableau) pair at the given scale.
SuiteReport verifyEngineAgreementSuite(int maxCells, int maxLetters);

}  // namespace skewschur

#endif
