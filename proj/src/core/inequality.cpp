#include "l2poly/core/inequality.hpp"

#include "l2poly/core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace l2poly {

Variable Variable::parse(std::string_view name) {
  std::size_t k = 0;
  while (k < name.size() && std::isalpha(static_cast<unsigned char>(name[k]))) ++k;
  if (k == 0 || k == name.size())
    throw std::invalid_argument("bad variable name: " + std::string(name));
  int idx = 0;
  for (std::size_t t = k; t < name.size(); ++t) {
    if (!std::isdigit(static_cast<unsigned char>(name[t])))
      throw std::invalid_argument("bad variable name: " + std::string(name));
    idx = idx * 10 + (name[t] - '0');
  }
  return Variable{std::string(name.substr(0, k)), idx};
}

// ---------------------------------------------------------------------------

LinearInequality::LinearInequality(Coeffs coeffs, Integer rhs, bool strict)
    : rhs_(std::move(rhs)), strict_(strict) {
  for (auto& [v, c] : coeffs)
    if (c != 0) coeffs_.emplace(v, std::move(c));
}

const Integer& LinearInequality::coeff(const Variable& v) const {
  static const Integer zero = 0;
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? zero : it->second;
}

void LinearInequality::set_coeff(const Variable& v, Integer c) {
  if (c == 0)
    coeffs_.erase(v);
  else
    coeffs_[v] = std::move(c);
}

LinearInequality LinearInequality::negated() const {
  Coeffs neg;
  for (const auto& [v, c] : coeffs_) neg.emplace(v, -c);
  return LinearInequality(std::move(neg), -rhs_, !strict_);
}

Integer LinearInequality::lhs_value(std::span<const Variable> vars,
                                    std::span<const Integer> point) const {
  if (vars.size() != point.size())
    throw DimensionMismatch("point has " + std::to_string(point.size()) + " coordinates, expected " +
                            std::to_string(vars.size()));
  Integer s = 0;
  for (const auto& [v, c] : coeffs_) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw UnknownVariable("variable " + v.str() + " not in point layout");
    s += c * point[static_cast<std::size_t>(it - vars.begin())];
  }
  return s;
}

namespace {

void append_term(std::string& out, const Integer& c, const Variable& v) {
  if (!out.empty()) out += ' ';
  out += c > 0 ? '+' : '-';
  Integer mag = abs(c);
  if (mag != 1) out += mag.str();
  out += v.str();
}

}  // namespace

std::string LinearInequality::str() const {
  std::string s;
  for (const auto& [v, c] : coeffs_)
    if (c > 0) append_term(s, c, v);
  for (const auto& [v, c] : coeffs_)
    if (c < 0) append_term(s, c, v);
  if (s.empty()) s = "0";
  s += strict_ ? " < " : " <= ";
  s += rhs_.str();
  return s;
}

LinearInequality difference_row(const IndexSet& J, const IndexSet& I, Integer bound,
                                const std::string& block) {
  LinearInequality::Coeffs c;
  for (int j : J) c[Variable{block, j + 1}] += 1;
  for (int i : I) c[Variable{block, i + 1}] -= 1;
  return LinearInequality(std::move(c), std::move(bound));
}

LinearInequality parse_inequality(std::string_view text) {
  std::size_t op = text.find('<');
  if (op == std::string_view::npos) throw std::invalid_argument("missing '<' in: " + std::string(text));
  bool strict = !(op + 1 < text.size() && text[op + 1] == '=');
  std::string lhs(text.substr(0, op));
  std::string rhs(text.substr(op + (strict ? 1 : 2)));

  LinearInequality::Coeffs coeffs;
  std::size_t k = 0;
  auto skip_ws = [&] {
    while (k < lhs.size() && std::isspace(static_cast<unsigned char>(lhs[k]))) ++k;
  };
  skip_ws();
  bool first = true;
  while (k < lhs.size()) {
    int sign = 1;
    if (lhs[k] == '+' || lhs[k] == '-') {
      sign = lhs[k] == '-' ? -1 : 1;
      ++k;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected sign in: " + lhs);
    }
    first = false;
    std::size_t d0 = k;
    while (k < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[k]))) ++k;
    Integer mag = d0 == k ? Integer(1) : Integer(lhs.substr(d0, k - d0));
    skip_ws();
    if (k < lhs.size() && lhs[k] == '*') {
      ++k;
      skip_ws();
    }
    if (k < lhs.size() && std::isalpha(static_cast<unsigned char>(lhs[k]))) {
      std::size_t v0 = k;
      while (k < lhs.size() && std::isalnum(static_cast<unsigned char>(lhs[k]))) ++k;
      coeffs[Variable::parse(lhs.substr(v0, k - v0))] += sign * mag;
    } else if (d0 == k || mag != 0) {
      throw std::invalid_argument("constant terms belong on the right-hand side: " + lhs);
    }
    skip_ws();
  }
  std::size_t r0 = rhs.find_first_not_of(" \t");
  std::size_t r1 = rhs.find_last_not_of(" \t");
  if (r0 == std::string::npos) throw std::invalid_argument("missing right-hand side");
  return LinearInequality(std::move(coeffs), Integer(rhs.substr(r0, r1 - r0 + 1)), strict);
}

bool evaluate(const LinearInequality& row, std::span<const Variable> vars,
              std::span<const Integer> point) {
  Integer v = row.lhs_value(vars, point);
  return row.strict() ? v < row.rhs() : v <= row.rhs();
}

// ---------------------------------------------------------------------------

InequalitySystem::InequalitySystem(std::vector<Variable> variables, bool lattice_scoped)
    : variables_(std::move(variables)), lattice_scoped_(lattice_scoped) {}

void InequalitySystem::add(LinearInequality row) {
  for (const auto& [v, c] : row.coeffs())
    if (index_of(v) < 0) throw UnknownVariable("variable " + v.str() + " not declared in system");
  rows_.push_back(std::move(row));
}

int InequalitySystem::index_of(const Variable& v) const {
  auto it = std::find(variables_.begin(), variables_.end(), v);
  return it == variables_.end() ? -1 : static_cast<int>(it - variables_.begin());
}

bool InequalitySystem::satisfied_by(std::span<const Integer> point) const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const LinearInequality& r) { return evaluate(r, variables_, point); });
}

std::string InequalitySystem::str() const {
  std::string s;
  for (const auto& r : rows_) s += r.str() + '\n';
  return s;
}

std::vector<Variable> make_variables(const std::string& block, int n) {
  std::vector<Variable> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v.push_back(Variable{block, i});
  return v;
}

bool canonical_less(const LinearInequality& a, const LinearInequality& b) {
  if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
  auto support = [](const LinearInequality& r, bool positive) {
    std::vector<Variable> s;
    for (const auto& [v, c] : r.coeffs())
      if ((c > 0) == positive) s.push_back(v);
    return s;
  };
  auto pa = support(a, true), pb = support(b, true);
  if (pa != pb) return pa < pb;
  auto na = support(a, false), nb = support(b, false);
  if (na != nb) return na < nb;
  for (auto ia = a.coeffs().begin(), ib = b.coeffs().begin(); ia != a.coeffs().end(); ++ia, ++ib)
    if (ia->second != ib->second) return ia->second < ib->second;
  if (a.rhs() != b.rhs()) return a.rhs() < b.rhs();
  return a.strict() < b.strict();
}

InequalitySystem canonicalize(const InequalitySystem& sys) {
  // coefficient map -> tightest row seen so far
  std::map<LinearInequality::Coeffs, LinearInequality> best;
  for (const auto& row : sys.rows()) {
    Integer g = 0;
    for (const auto& [v, c] : row.coeffs()) g = gcd(g, c);
    LinearInequality r = row;
    if (g > 1) {
      bool divides = row.rhs() % g == 0;
      if (divides || (sys.lattice_scoped() && !row.strict())) {
        LinearInequality::Coeffs scaled;
        for (const auto& [v, c] : row.coeffs()) scaled.emplace(v, c / g);
        r = LinearInequality(std::move(scaled), floor_div(row.rhs(), g), row.strict());
      }
    }
    auto it = best.find(r.coeffs());
    if (it == best.end()) {
      best.emplace(r.coeffs(), std::move(r));
      continue;
    }
    LinearInequality& cur = it->second;
    if (r.rhs() < cur.rhs() || (r.rhs() == cur.rhs() && r.strict() && !cur.strict())) cur = std::move(r);
  }
  InequalitySystem out(sys.variables(), sys.lattice_scoped());
  std::vector<LinearInequality> rows;
  rows.reserve(best.size());
  for (auto& [k, r] : best) rows.push_back(std::move(r));
  std::sort(rows.begin(), rows.end(), canonical_less);
  for (auto& r : rows) out.add(std::move(r));
  return out;
}

}  // namespace l2poly
