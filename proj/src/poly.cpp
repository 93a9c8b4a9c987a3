#include "fiberbound/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>

#include "fiberbound/errors.hpp"

namespace fiberbound {

std::string to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::grevlex: return "grevlex";
    case MonomialOrder::grlex: return "grlex";
    case MonomialOrder::lex: return "lex";
  }
  return "?";
}

std::optional<MonomialOrder> parse_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::grevlex;
  if (name == "grlex") return MonomialOrder::grlex;
  if (name == "lex") return MonomialOrder::lex;
  return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::times_variable(std::size_t i) const {
  Monomial r(*this);
  ++r.exps_[i];
  ++r.degree_;
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ += b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

std::strong_ordering order_compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.size() != b.size()) throw DimensionMismatch("monomials have different numbers of variables");
  const std::size_t n = a.size();
  if (order != MonomialOrder::lex && a.degree() != b.degree()) return a.degree() <=> b.degree();
  if (order == MonomialOrder::grevlex) {
    for (std::size_t i = n; i-- > 0;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- PolyRing

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

RingPtr PolyRing::make(FieldSpec field, std::vector<std::string> vars, MonomialOrder order) {
  if (vars.empty()) throw InvalidArgument("a polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_identifier(v)) throw InvalidArgument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name '" + v + "'");
  }
  return RingPtr(new PolyRing(field, std::move(vars), order));
}

std::optional<std::size_t> PolyRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return make(field_, vars_, order); }

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------- Poly

namespace {

void check_ring(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

}  // namespace

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const PolyRing& R = *ring_;
  const FieldSpec& F = R.field();
  std::sort(terms.begin(), terms.end(),
            [&R](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    F.normalize(t.coef);
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef = F.add(terms_.back().coef, t.coef);
      if (sgn(terms_.back().coef) == 0) terms_.pop_back();
    } else if (sgn(t.coef) != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
  Monomial one(ring->nvars());
  return Poly(ring, {Term{one, c}});
}

Poly Poly::variable(RingPtr ring, std::size_t i) {
  Monomial m = Monomial::variable(ring->nvars(), i);
  return Poly(ring, {Term{m, 1}});
}

Poly Poly::monomial(RingPtr ring, Monomial m, const Scalar& c) {
  return Poly(ring, {Term{std::move(m), c}});
}

std::uint64_t Poly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef = ring_->field().neg(t.coef);
  return r;
}

Poly Poly::scaled(const Scalar& c) const { return times_monomial(Monomial(ring_->nvars()), c); }

Poly Poly::times_monomial(const Monomial& m, const Scalar& c) const {
  Poly r(ring_);
  if (sgn(c) == 0) return r;
  const FieldSpec& F = ring_->field();
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order.
  for (const auto& t : terms_) {
    Scalar coef = F.mul(t.coef, c);
    if (sgn(coef) != 0) r.terms_.push_back(Term{t.mono * m, std::move(coef)});
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading().coef));
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono[var];
    if (e == 0) continue;
    auto exps = t.mono.exponents();
    --exps[var];
    out.push_back(Term{Monomial(std::move(exps)), t.coef * e});
  }
  return Poly(ring_, std::move(out));
}

Poly Poly::in_ring(RingPtr other) const {
  if (!(other->field() == ring_->field()) || other->variables() != ring_->variables())
    throw RingMismatch();
  return Poly(std::move(other), terms_);
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->nvars()) throw DimensionMismatch("evaluation point has wrong length");
  const FieldSpec& F = ring_->field();
  Scalar sum = 0;
  for (const auto& t : terms_) {
    Scalar v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (std::uint32_t e = 0; e < t.mono[i]; ++e) v = F.mul(v, point[i]);
    sum = F.add(sum, v);
  }
  return sum;
}

Poly operator+(const Poly& a, const Poly& b) {
  check_ring(a, b);
  const PolyRing& R = *a.ring_;
  const FieldSpec& F = R.field();
  Poly r(a.ring_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    auto c = R.compare(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Scalar s = F.add(a.terms_[i].coef, b.terms_[j].coef);
      if (sgn(s) != 0) r.terms_.push_back(Term{a.terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), a.terms_.begin() + i, a.terms_.end());
  r.terms_.insert(r.terms_.end(), b.terms_.begin() + j, b.terms_.end());
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  const FieldSpec& F = a.ring_->field();
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back(Term{s.mono * t.mono, F.mul(s.coef, t.coef)});
  return Poly(a.ring_, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Poly poly_arith(ArithOp op, const Poly& f, const Poly& g) {
  switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
  }
  throw InvalidArgument("unknown arithmetic operation");
}

std::string Poly::render() const {
  if (terms_.empty()) return "0";
  const auto& vars = ring_->variables();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (wrote) os << '*';
      os << vars[i];
      if (t.mono[i] > 1) os << '^' << t.mono[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.render(); }

// ---------------------------------------------------------------- parser

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    bool negate = accept('-');
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("exponent must be a nonnegative integer");
      mpz_class e = integer();
      if (e > 100000) fail("exponent too large");
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Poly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const FieldSpec& F = ring_->field();
      Scalar v = F.from_integer(integer());
      // p/q literal; binds tighter than '*' so 2/3*x is (2/3)*x.
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        std::size_t at = pos_;
        Scalar d = F.from_integer(integer());
        if (d == 0) {
          pos_ = at;
          fail("denominator is zero in this field");
        }
        v = F.div(v, d);
      }
      return Poly::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->variable_index(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Poly::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return ExprParser(text, ring).parse(); }

}  // namespace fiberbound
