#ifndef FIBERBOUND_TESTS_SUPPORT_HPP
#define FIBERBOUND_TESTS_SUPPORT_HPP

// Helpers shared by the unit tests and the acceptance binary. The oracles
// here avoid the code paths they are used to check.

#include <random>
#include <string>
#include <vector>

#include "fiberbound/artin.hpp"
#include "fiberbound/groebner.hpp"

namespace fiberbound::testing {

RingPtr ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex,
             FieldSpec field = FieldSpec::rationals());
Poly P(const RingPtr& r, const std::string& text);
Ideal ideal(const RingPtr& r, const std::vector<std::string>& gens);

struct CorpusEntry {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::string> gens;
};
/// Twelve zero-dimensional ideals of assorted shapes.
const std::vector<CorpusEntry>& corpus();
Ideal corpus_ideal(const CorpusEntry& e, MonomialOrder order = MonomialOrder::grevlex);

/// Random polynomial with small integer coefficients.
Poly random_poly(const RingPtr& r, std::mt19937_64& rng, unsigned max_degree, unsigned max_terms);

/// Monomial ideals in at most two variables: every antichain of monomials
/// in x, y of degree <= max_degree (as exponent pairs).
std::vector<std::vector<std::pair<unsigned, unsigned>>> monomial_antichains(unsigned max_degree);

/// Number of (a, b) divisible by no generator, or -1 if infinite. Direct
/// count, no Gröbner bases involved.
long staircase_count(const std::vector<std::pair<unsigned, unsigned>>& gens);

/// Rank of a rational matrix by fraction-free (Bareiss) elimination on
/// the cleared-denominator integer matrix.
std::size_t bareiss_rank(const Matrix& m);

/// dim Der_k(A, A): derivations are fixed by a_i = D(x_i), subject to
/// sum_i (d f_j / d x_i) a_i = 0 in A for every generator. Independent of
/// the Kähler module and Hom machinery.
std::size_t derivation_dimension(const AlgebraPtr& algebra);

}  // namespace fiberbound::testing

#endif  // FIBERBOUND_TESTS_SUPPORT_HPP
