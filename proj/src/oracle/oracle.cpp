#include "l2poly/oracle.hpp"

#include <algorithm>
#include <cstdlib>

namespace l2poly {

namespace {

constexpr std::uint64_t kDefaultCap = 1'000'000;

void check_same_dim(int a, int b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a) + " and " + std::to_string(b));
}

Point join(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Point meet(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Point shifted(Point p, const Integer& mu) {
  for (auto& v : p) v += mu;
  return p;
}

Point normalized(const Point& p) {
  return shifted(p, -p.back());
}

Integer finite(const ExtInt& v, const char* what) {
  if (!v.is_finite()) throw std::invalid_argument(std::string(what) + " is unbounded");
  return v.value();
}

}  // namespace

Integer Window::volume() const {
  check_same_dim(static_cast<int>(lo.size()), static_cast<int>(hi.size()), "window");
  Integer v = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return 0;
    v *= hi[i] - lo[i] + 1;
  }
  return v;
}

bool Window::contains(const Point& p) const {
  if (p.size() != lo.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  return true;
}

Window Window::around(const PointSet& s, long long slack) {
  return {shifted(s.lower(), -slack), shifted(s.upper(), slack)};
}

Window Window::for_sum(const LnatSystem& s1, const LnatSystem& s2, long long slack) {
  check_same_dim(s1.dim(), s2.dim(), "window for a sum");
  Window w;
  for (int i = 0; i < s1.dim(); ++i) {
    w.lo.push_back(finite(s1.alpha()[i], "alpha") + finite(s2.alpha()[i], "alpha") - slack);
    w.hi.push_back(finite(s1.beta()[i], "beta") + finite(s2.beta()[i], "beta") + slack);
  }
  return w;
}

std::uint64_t enumeration_cap() {
  const char* env = std::getenv("L2POLY_ENUM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw Error(std::string("L2POLY_ENUM_CAP must be a positive integer, got '") + env + "'");
  return v;
}

void for_each_point(const Window& w, const std::function<void(const Point&)>& f) {
  const Integer vol = w.volume();
  if (vol > enumeration_cap())
    throw VolumeCapExceeded("window holds " + to_string(vol) + " points, cap is " +
                            std::to_string(enumeration_cap()));
  if (vol == 0) return;
  Point p = w.lo;
  const std::size_t n = p.size();
  while (true) {
    f(p);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (p[k] < w.hi[k]) {
        ++p[k];
        break;
      }
      p[k] = w.lo[k];
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

PointSet enumerate(const InequalitySystem& sys, const Window& w) {
  check_same_dim(static_cast<int>(sys.variables().size()), w.dim(), "enumerate");
  PointSet out(w.dim());
  for_each_point(w, [&](const Point& p) {
    if (sys.satisfied_by(p)) out.insert(p);
  });
  return out;
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  check_same_dim(a.dim(), b.dim(), "minkowski_sum");
  PointSet out(a.dim());
  for (const auto& x : a)
    for (const auto& y : b) {
      Point s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      out.insert(std::move(s));
    }
  return out;
}

bool is_box(const PointSet& s) {
  if (s.empty()) return false;
  return Window::around(s).volume() == s.size();
}

bool is_sublattice(const PointSet& s) {
  for (auto a = s.begin(); a != s.end(); ++a)
    for (auto b = std::next(a); b != s.end(); ++b)
      if (!s.contains(join(*a, *b)) || !s.contains(meet(*a, *b))) return false;
  return true;
}

bool is_l_convex(const PointSet& s, bool modulo_one) {
  if (s.empty()) return false;
  if (!modulo_one) {
    for (const auto& x : s)
      if (!s.contains(shifted(x, 1)) || !s.contains(shifted(x, -1))) return false;
    return is_sublattice(s);
  }
  PointSet reps(s.dim());
  for (const auto& x : s) reps.insert(normalized(x));
  // x v (y + mu1) is x or y + mu1 outside [min(x - y), max(x - y)].
  for (const auto& x : reps)
    for (const auto& y : reps) {
      Integer lo = x[0] - y[0], hi = lo;
      for (std::size_t i = 1; i < x.size(); ++i) {
        lo = std::min(lo, Integer(x[i] - y[i]));
        hi = std::max(hi, Integer(x[i] - y[i]));
      }
      for (Integer mu = lo; mu <= hi; ++mu) {
        Point ys = shifted(y, mu);
        if (!reps.contains(normalized(join(x, ys))) || !reps.contains(normalized(meet(x, ys)))) return false;
      }
    }
  return true;
}

bool is_lnat_convex(const PointSet& s) {
  if (s.empty()) return false;
  return points_of(lnat_from_points(s)) == s;
}

bool is_multimodular(const PointSet& s) {
  if (s.empty()) return false;
  const std::size_t n = static_cast<std::size_t>(s.dim());
  std::vector<Point> F;
  for (std::size_t k = 0; k <= n; ++k) {
    Point d(n, 0);
    if (k > 0) d[k - 1] += 1;
    if (k < n) d[k] -= 1;
    F.push_back(std::move(d));
  }
  auto add = [](const Point& a, const Point& b, int sign) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + sign * b[i];
    return r;
  };
  for (const auto& p : s)
    for (std::size_t a = 0; a < F.size(); ++a) {
      const Point z = add(p, F[a], -1);
      for (std::size_t b = 0; b < F.size(); ++b) {
        if (b == a || !s.contains(add(z, F[b], 1))) continue;
        if (!s.contains(z) || !s.contains(add(add(z, F[a], 1), F[b], 1))) return false;
      }
    }

  // The local rule above says nothing about sets with gaps such as
  // {(0,0), (2,0)}; the set must also be cut out by bounds on the sums
  // x_k + ... + x_l over consecutive index ranges.
  std::vector<Integer> lo, hi;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k; l < n; ++l) {
      bool first = true;
      Integer mn, mx;
      for (const auto& p : s) {
        Integer v = 0;
        for (std::size_t i = k; i <= l; ++i) v += p[i];
        if (first || v < mn) mn = v;
        if (first || v > mx) mx = v;
        first = false;
      }
      lo.push_back(mn);
      hi.push_back(mx);
    }
  std::size_t described = 0;
  for_each_point(Window{s.lower(), s.upper()}, [&](const Point& p) {
    std::size_t r = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Integer v = 0;
      for (std::size_t l = k; l < n; ++l, ++r) {
        v += p[l];
        if (v < lo[r] || v > hi[r]) return;
      }
    }
    ++described;
  });
  return described == s.size();
}

PointSet d_transform(const PointSet& s, bool inverse) {
  PointSet out(s.dim());
  for (const auto& y : s) {
    Point r(y.size());
    Integer acc = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (inverse) {
        acc += y[i];
        r[i] = acc;
      } else {
        r[i] = y[i] - (i ? y[i - 1] : Integer(0));
      }
    }
    out.insert(std::move(r));
  }
  return out;
}

PointSet points_of(const LnatSystem& s) {
  Window w;
  for (int i = 0; i < s.dim(); ++i) {
    w.lo.push_back(finite(s.alpha()[i], "alpha"));
    w.hi.push_back(finite(s.beta()[i], "beta"));
  }
  PointSet out(s.dim());
  for_each_point(w, [&](const Point& p) {
    if (membership(s, p)) out.insert(p);
  });
  return out;
}

bool l2_membership(const L2Instance& inst, const Point& x) {
  const int n = inst.dim();
  check_same_dim(static_cast<int>(x.size()), n, "l2_membership");
  ExtMatrix m(n, ExtInt::plus_inf());
  for (int i = 0; i < n; ++i) m(i, i) = 0;
  for (const auto& e : inst.g1().edges()) m(e.from, e.to) = std::min(m(e.from, e.to), ExtInt(e.length));
  // y_a - y_b <= g2_ab - x_b + x_a
  for (const auto& e : inst.g2().edges()) {
    ExtInt len = Integer(e.length - x[e.to] + x[e.from]);
    m(e.to, e.from) = std::min(m(e.to, e.from), len);
  }
  return !detect_negative_cycle(m).has_value();
}

bool lnat2_membership(const LnatSystem& s1, const LnatSystem& s2, const Point& x) {
  check_same_dim(static_cast<int>(x.size()), s1.dim(), "lnat2_membership");
  Point ext = x;
  ext.push_back(0);
  return l2_membership(lnat2_embedding(s1, s2), ext);
}

PointSet enumerate_l2(const L2Instance& inst, const Window& w) {
  check_same_dim(w.dim(), inst.dim(), "enumerate_l2");
  PointSet out(inst.dim());
  for_each_point(w, [&](const Point& p) {
    if (l2_membership(inst, p)) out.insert(p);
  });
  return out;
}

ExtremeCheck extreme_elements(const PointSet& s) {
  ExtremeCheck c{s.upper(), s.lower()};
  c.has_max = s.contains(c.max);
  c.has_min = s.contains(c.min);
  return c;
}

bool verify_lnat2_decomposition(const PointSet& s, const LnatSystem& s1, const LnatSystem& s2) {
  return minkowski_sum(points_of(s1), points_of(s2)) == s;
}

PropositionCheck check_proposition(const L2Instance& inst, const Window& w) {
  PropositionCheck c;
  c.which = Proposition::L2AndLnat;
  c.set = enumerate_l2(inst, w);
  c.first = true;
  c.second = !c.set.empty() && is_lnat_convex(c.set);
  c.conclusion = c.set.empty() || is_sublattice(c.set);
  return c;
}

PropositionCheck check_proposition(const LnatSystem& s1, const LnatSystem& s2) {
  PropositionCheck c;
  c.which = Proposition::Lnat2AndMultimodular;
  c.set = minkowski_sum(points_of(s1), points_of(s2));
  c.first = true;
  c.second = is_multimodular(c.set);
  c.conclusion = is_box(c.set);
  return c;
}

PropositionCheck check_proposition(const LnatSystem& s1, const LnatSystem& s2, const InequalitySystem& mnat2) {
  PropositionCheck c;
  c.which = Proposition::Lnat2AndMnat2;
  c.set = minkowski_sum(points_of(s1), points_of(s2));
  c.first = true;
  bool shape = true;
  for (const auto& r : mnat2.rows()) {
    if (r.is_constant()) continue;
    const Integer& c0 = r.coeffs().begin()->second;
    for (const auto& [v, a] : r.coeffs())
      if (a != c0) shape = false;
  }
  c.second = shape && !c.set.empty() && enumerate(mnat2, Window::around(c.set, 1)) == c.set;
  c.conclusion = is_box(c.set);
  return c;
}

std::string to_string(Proposition p) {
  switch (p) {
    case Proposition::L2AndLnat: return "L2 and L-natural => L";
    case Proposition::Lnat2AndMultimodular: return "L-natural-2 and multimodular => box";
    case Proposition::Lnat2AndMnat2: return "L-natural-2 and M-natural-2 => box";
  }
  return "";
}

}  // namespace l2poly
