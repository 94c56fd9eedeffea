#include "aqc/polynomial.hpp"

#include <algorithm>

#include "aqc/errors.hpp"

namespace aqc {

Monomial::Monomial(std::vector<Power> powers) {
  std::sort(powers.begin(), powers.end(),
            [](const Power& a, const Power& b) { return a.first < b.first; });
  for (const auto& [v, e] : powers) {
    if (e == 0) continue;
    if (!powers_.empty() && powers_.back().first == v) {
      powers_.back().second += e;
    } else {
      powers_.emplace_back(v, e);
    }
    degree_ += e;
  }
}

Monomial Monomial::of(Variable v, unsigned exponent) { return Monomial({{v, exponent}}); }

unsigned Monomial::exponent(Variable v) const {
  for (const auto& [w, e] : powers_) {
    if (w == v) return e;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.powers_.reserve(a.powers_.size() + b.powers_.size());
  auto i = a.powers_.begin();
  auto j = b.powers_.begin();
  while (i != a.powers_.end() || j != b.powers_.end()) {
    if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first)) {
      r.powers_.push_back(*i++);
    } else if (i == a.powers_.end() || j->first < i->first) {
      r.powers_.push_back(*j++);
    } else {
      r.powers_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  const std::size_t common = std::min(pa.size(), pb.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (pa[i].first != pb[i].first) return pa[i].first < pb[i].first;
    if (pa[i].second != pb[i].second) return pa[i].second > pb[i].second;
  }
  return pa.size() > pb.size();
}

MPoly::MPoly(long c) : MPoly(Int(c)) {}

MPoly::MPoly(const Int& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::variable(Variable v) { return term(Int(1), Monomial::of(v)); }

MPoly MPoly::term(const Int& c, Monomial m) {
  MPoly p;
  if (sgn(c) != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

Int MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

unsigned MPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

Int MPoly::evaluate_at_ones() const {
  Int sum = 0;
  for (const auto& [m, c] : terms_) sum += c;
  return sum;
}

void MPoly::add_term(const Monomial& m, const Int& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

std::vector<Int> univariate_coefficients(const MPoly& p, Variable v) {
  std::vector<Int> out;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m.exponent(v);
    if (m.degree() != e) throw InvalidArgument("polynomial is not univariate in the given variable");
    if (out.size() <= e) out.resize(e + 1, Int(0));
    out[e] += c;
  }
  if (out.empty()) out.emplace_back(0);
  return out;
}

std::string variable_name(Variable v, const FamilyTable& families) {
  std::string name = v.family < families.size() ? families[v.family].name
                                                 : "f" + std::to_string(v.family);
  if (v.index > 0) name += "_" + std::to_string(v.index);
  return name;
}

std::string to_string(const MPoly& p, const FamilyTable& families) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::string> tokens;
    bool compact = true;
    for (const auto& [v, e] : m.powers()) {
      std::string t = variable_name(v, families);
      compact = compact && t.size() == 1;
      if (e > 1) t += "^" + std::to_string(e);
      tokens.push_back(std::move(t));
    }
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const Int mag = abs(c);
    if (m.is_one() || mag != 1) out += mag.get_str();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i > 0 && !compact) out += "*";
      out += tokens[i];
    }
  }
  return out;
}

}  // namespace aqc
