#include "verify.hpp"

#include <functional>
#include <map>
#include <optional>

#include "fiberbound/bounds.hpp"
#include "fiberbound/errors.hpp"
#include "fiberbound/invariants.hpp"
#include "fiberbound/scheme_file.hpp"

namespace fiberbound::cli {

namespace {

// Loads each scenario once; a load failure is reported by every check that needs it.
class Scenarios {
 public:
  Scenarios(std::filesystem::path dir, MonomialOrder order) : dir_(std::move(dir)), order_(order) {}

  const Ideal& ideal(const std::string& name) {
    auto it = cache_.find(name);
    if (it == cache_.end()) {
      SchemeFile f = load_scheme_file(dir_ / (name + ".scheme"), order_);
      if (!f.ring->field().is_rationals()) throw InvalidArgument(name + ": golden checks run over QQ only");
      it = cache_.emplace(name, f.ideal()).first;
    }
    return it->second;
  }

  const AlgebraPtr& algebra(const std::string& name) {
    auto it = algebras_.find(name);
    if (it == algebras_.end()) it = algebras_.emplace(name, quotient_algebra(ideal(name))).first;
    return it->second;
  }

  std::size_t tangent(const std::string& name) {
    auto it = tangents_.find(name);
    if (it == tangents_.end()) it = tangents_.emplace(name, tangent_degree(algebra(name))).first;
    return it->second;
  }

  const FixedOmegaDeformations& deformations(const std::string& name) {
    auto it = deformations_.find(name);
    if (it == deformations_.end()) it = deformations_.emplace(name, deformations_fixing_omega(ideal(name))).first;
    return it->second;
  }

 private:
  std::filesystem::path dir_;
  MonomialOrder order_;
  std::map<std::string, Ideal> cache_;
  std::map<std::string, AlgebraPtr> algebras_;
  std::map<std::string, std::size_t> tangents_;
  std::map<std::string, FixedOmegaDeformations> deformations_;
};

Check run_check(const std::string& name, long expected, const std::function<long()>& compute) {
  Check c{name, std::to_string(expected), "", "", false};
  try {
    long got = compute();
    c.actual = std::to_string(got);
    c.passed = got == expected;
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  return c;
}

Check run_verdict(const std::string& name, bool expected, const std::function<bool()>& compute) {
  Check c{name, expected ? "satisfied" : "violated", "", "", false};
  try {
    bool got = compute();
    c.actual = got ? "satisfied" : "violated";
    c.passed = got == expected;
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  return c;
}

}  // namespace

std::vector<Check> verify_scenarios(const std::filesystem::path& dir, MonomialOrder order) {
  Scenarios s(dir, order);
  std::vector<Check> out;
  auto deg = [&](const std::string& n) { return static_cast<long>(s.algebra(n)->degree()); };
  auto tan = [&](const std::string& n) { return static_cast<long>(s.tangent(n)); };

  const std::string qq = "quartic_quintic";
  out.push_back(run_check(qq + ": degree", 20, [&] { return deg(qq); }));
  out.push_back(run_check(qq + ": dim V'", 17, [&] { return static_cast<long>(s.deformations(qq).space.dim()); }));
  out.push_back(run_check(qq + ": dim of the module closure of V'", 18,
                          [&] { return static_cast<long>(s.deformations(qq).closure.dim()); }));

  for (long d = 1; d <= 5; ++d) {
    const std::string n = "corank_" + std::to_string(d);
    out.push_back(run_check(n + ": degree", d + 1, [&, n] { return deg(n); }));
    out.push_back(run_check(n + ": tangent degree", d * d, [&, n] { return tan(n); }));
  }

  const std::string cp = "cube_of_maximal_ideal";
  out.push_back(run_check(cp + ": degree", 10, [&] { return deg(cp); }));
  out.push_back(run_check(cp + ": tangent degree", 27, [&] { return tan(cp); }));
  out.push_back(run_check(cp + ": min n (c=1, m=0)", 36, [&] { return min_n_for_subscheme(deg(cp), tan(cp), 1, 0); }));
  out.push_back(run_verdict(cp + ": subscheme bound at n=35", false,
                            [&] { return check_subscheme_bound(deg(cp), tan(cp), {35, 1, 0}).satisfied; }));
  out.push_back(run_verdict(cp + ": subscheme bound at n=36", true,
                            [&] { return check_subscheme_bound(deg(cp), tan(cp), {36, 1, 0}).satisfied; }));

  const std::string ft = "fermat_cone_truncation";
  out.push_back(run_check(ft + ": degree", 31, [&] { return deg(ft); }));
  out.push_back(run_check(ft + ": tangent degree", 70, [&] { return tan(ft); }));
  out.push_back(run_check(ft + ": min n (c=1, m=1)", 69, [&] { return min_n_for_subscheme(deg(ft), tan(ft), 1, 1); }));
  out.push_back(run_verdict(ft + ": family bound at n=68", false,
                            [&] { return check_family_bound(deg(ft), tan(ft), {68, 1, 1}).satisfied; }));
  out.push_back(run_verdict(ft + ": family bound at n=69", true,
                            [&] { return check_family_bound(deg(ft), tan(ft), {69, 1, 1}).satisfied; }));

  for (long m = 2; m <= 6; ++m) {
    const std::string n = "curvilinear_" + std::to_string(m);
    out.push_back(run_check(n + ": omega degree", m - 1,
                            [&, n] { return static_cast<long>(kaehler(s.algebra(n)).dim()); }));
    out.push_back(run_check(n + ": dim of the module closure of V'", 2 * m - (m - 1),
                            [&, n] { return static_cast<long>(s.deformations(n).closure.dim()); }));
  }
  return out;
}

}  // namespace fiberbound::cli
