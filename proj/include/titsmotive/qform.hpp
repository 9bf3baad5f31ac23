#ifndef TITSMOTIVE_QFORM_HPP
#define TITSMOTIVE_QFORM_HPP

// Nondegenerate diagonal quadratic forms over Q and their local-global
// invariants: Hilbert symbols, Hasse invariants, isotropy by the
// Hasse-Minkowski casework, Witt index by invariant-tuple stripping (no
// isotropic vectors are ever constructed), and synthesis of a diagonal form
// from a consistent invariant tuple.
//
// Places of Q are the real place and the primes. The set of places relevant
// to a form is {infinity, 2} plus the odd primes dividing a numerator or
// denominator of a coefficient; at every other place the form is a unit form
// and isotropy is automatic in dimension >= 3, while in dimension <= 2 the
// relevant-place verdicts already decide (a positive rational with even
// valuation everywhere is a square).

#include <titsmotive/arith.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace titsmotive {

// The real place is encoded as p = 0, finite places by the prime itself.
struct RationalPlace {
  Int p;  // 0 means the real place

  bool real() const { return p == 0; }
  static RationalPlace infinity() { return {Int(0)}; }
  static RationalPlace prime(Int q) { return {std::move(q)}; }

  friend bool operator==(const RationalPlace& x, const RationalPlace& y) { return x.p == y.p; }
  friend bool operator<(const RationalPlace& x, const RationalPlace& y) { return x.p < y.p; }

  std::string str() const { return real() ? "infinity" : p.str(); }
};

inline void validate_place(const RationalPlace& v) {
  if (!v.real() && !is_prime(v.p))
    throw validation_error("place '" + v.p.str() + "' is not prime");
}

// Hilbert symbol (a,b)_v in {+1,-1}, by the classical closed forms.
inline int hilbert_symbol(const Rat& a, const Rat& b, const RationalPlace& v) {
  if (a == 0 || b == 0) throw validation_error("hilbert symbol needs nonzero arguments");
  if (v.real()) return (a < 0 && b < 0) ? -1 : 1;
  const Int& p = v.p;
  if (p == 2) {
    long alpha = valuation(a, 2), beta = valuation(b, 2);
    Int u = mod_of_rat(unit_part(a, 2), 8), w = mod_of_rat(unit_part(b, 2), 8);
    auto eps = [](const Int& x) { return (x == 3 || x == 7) ? 1 : 0; };  // (x-1)/2 mod 2
    auto omega = [](const Int& x) { return (x == 3 || x == 5) ? 1 : 0; };  // (x^2-1)/8 mod 2
    long s = eps(u) * eps(w) + (alpha % 2 ? omega(w) : 0) + (beta % 2 ? omega(u) : 0);
    return s % 2 ? -1 : 1;
  }
  long alpha = valuation(a, p) & 1, beta = valuation(b, p) & 1;
  int lu = legendre(unit_part(a, p), p), lw = legendre(unit_part(b, p), p);
  int eps = legendre(Int(-1), p);  // (-1)^((p-1)/2)
  int r = 1;
  if (alpha && beta) r *= eps;
  if (beta) r *= lu;
  if (alpha) r *= lw;
  return r;
}

inline bool is_local_square(const Rat& a, const RationalPlace& v) {
  if (a == 0) throw validation_error("square test needs a nonzero argument");
  if (v.real()) return a > 0;
  long val = valuation(a, v.p);
  if (val % 2) return false;
  if (v.p == 2) return mod_of_rat(unit_part(a, 2), 8) == 1;
  return legendre(unit_part(a, v.p), v.p) == 1;
}

class QuadraticForm {
 public:
  explicit QuadraticForm(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw validation_error("quadratic form needs at least one coefficient");
    for (const auto& a : c_)
      if (a == 0) throw validation_error("quadratic form must be nondegenerate");
  }

  std::size_t dim() const { return c_.size(); }
  const std::vector<Rat>& coefficients() const { return c_; }

  Rat discriminant() const {
    Rat d = 1;
    for (const auto& a : c_) d *= a;
    return d;
  }

  // (-1)^(n(n-1)/2) * disc; the class that is trivial on hyperbolic forms.
  Rat signed_discriminant() const {
    std::size_t n = dim();
    Rat d = discriminant();
    return ((n * (n - 1) / 2) % 2) ? Rat(-d) : d;
  }

  std::pair<unsigned, unsigned> signature() const {
    unsigned pos = 0, neg = 0;
    for (const auto& a : c_) (a > 0 ? pos : neg)++;
    return {pos, neg};
  }

  // Hasse invariant: product of hilbert_symbol(a_i, a_j, v) over i < j.
  int hasse_invariant(const RationalPlace& v) const {
    int h = 1;
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = i + 1; j < c_.size(); ++j) h *= hilbert_symbol(c_[i], c_[j], v);
    return h;
  }

  // {infinity, 2} plus odd primes dividing numerators or denominators.
  std::set<RationalPlace> relevant_places() const {
    std::set<RationalPlace> s{RationalPlace::infinity(), RationalPlace::prime(Int(2))};
    for (const auto& a : c_)
      for (const auto& p : odd_prime_support(a)) s.insert(RationalPlace::prime(p));
    return s;
  }

  QuadraticForm scaled(const Rat& lambda) const {
    if (lambda == 0) throw validation_error("scaling by zero");
    std::vector<Rat> out(c_);
    for (auto& a : out) a *= lambda;
    return QuadraticForm(std::move(out));
  }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  std::vector<Rat> c_;
};

// ---------------------------------------------------------------------------
// Invariant tuples. All isotropy and Witt index logic runs on these; the
// stripping step realizes q = H + q' on invariants alone.

struct FormInvariants {
  std::size_t dim = 0;
  Rat disc = 1;                           // product of the coefficients
  std::map<RationalPlace, int> hasse;     // at every relevant place
  std::pair<unsigned, unsigned> signature{0, 0};

  friend bool operator==(const FormInvariants&, const FormInvariants&) = default;
};

inline FormInvariants invariants_of(const QuadraticForm& q) {
  FormInvariants t;
  t.dim = q.dim();
  t.disc = q.discriminant();
  for (const auto& v : q.relevant_places()) t.hasse[v] = q.hasse_invariant(v);
  t.signature = q.signature();
  return t;
}

// Local isotropy from the invariant tuple, by dimension casework.
inline bool is_isotropic_local(const FormInvariants& t, const RationalPlace& v) {
  if (t.dim <= 1) return false;
  if (v.real()) return t.signature.first > 0 && t.signature.second > 0;
  int eps = [&] {
    auto it = t.hasse.find(v);
    return it == t.hasse.end() ? 1 : it->second;
  }();
  switch (t.dim) {
    case 2:
      return is_local_square(-t.disc, v);
    case 3:
      return hilbert_symbol(Rat(-1), -t.disc, v) == eps;
    case 4:
      return !is_local_square(t.disc, v) || eps == hilbert_symbol(Rat(-1), Rat(-1), v);
    default:
      return true;  // dim >= 5 over a p-adic field
  }
}

inline bool is_isotropic(const QuadraticForm& q, const RationalPlace& v) {
  return is_isotropic_local(invariants_of(q), v);
}

// Hasse-Minkowski: isotropic over Q iff isotropic at every relevant place.
inline bool is_isotropic(const QuadraticForm& q) {
  FormInvariants t = invariants_of(q);
  for (const auto& [v, eps] : t.hasse)
    if (!is_isotropic_local(t, v)) return false;
  return true;
}

namespace detail {

// Invariants of q' where q = <1,-1> + q'. Discriminant gains a -1 factor,
// the Hasse invariant loses the hilbert symbol (-1, -disc), the signature
// drops one plus and one minus.
inline FormInvariants strip_hyperbolic(FormInvariants t) {
  if (t.dim < 2 || t.signature.first == 0 || t.signature.second == 0)
    throw std::logic_error("strip_hyperbolic: nothing to strip");
  Rat old_disc = t.disc;
  t.dim -= 2;
  t.disc = -t.disc;
  for (auto& [v, eps] : t.hasse) eps *= hilbert_symbol(Rat(-1), -old_disc, v);
  --t.signature.first;
  --t.signature.second;
  return t;
}

inline bool is_isotropic_everywhere(const FormInvariants& t) {
  if (t.dim <= 1) return false;
  for (const auto& [v, eps] : t.hasse)
    if (!is_isotropic_local(t, v)) return false;
  return true;
}

}  // namespace detail

// Number of hyperbolic planes split off by q over Q. Stripping introduces
// no new relevant places: the discriminant only changes by -1 factors.
inline unsigned witt_index(const QuadraticForm& q) {
  FormInvariants t = invariants_of(q);
  unsigned w = 0;
  while (t.dim >= 2 && detail::is_isotropic_everywhere(t)) {
    t = detail::strip_hyperbolic(t);
    ++w;
  }
  return w;
}

// Witt index over the completion at v.
inline unsigned witt_index_local(const QuadraticForm& q, const RationalPlace& v) {
  FormInvariants t = invariants_of(q);
  unsigned w = 0;
  while (t.dim >= 2 && is_isotropic_local(t, v)) {
    if (v.real()) {
      // strip_hyperbolic tracks the signature, which is all that matters here
      t.dim -= 2;
      --t.signature.first;
      --t.signature.second;
    } else {
      Rat old_disc = t.disc;
      t.dim -= 2;
      t.disc = -t.disc;
      auto it = t.hasse.find(v);
      if (it != t.hasse.end()) it->second *= hilbert_symbol(Rat(-1), -old_disc, v);
    }
    ++w;
  }
  return w;
}

inline unsigned anisotropic_kernel_dim(const QuadraticForm& q) {
  return static_cast<unsigned>(q.dim()) - 2 * witt_index(q);
}

// ---------------------------------------------------------------------------
// Synthesis: a diagonal form with prescribed invariants. Used to present
// anisotropic kernels and Levi factors concretely. The tuple must be
// realizable (it always is when produced by strip_hyperbolic); synthesis is
// verified against the request before returning.

namespace detail {

// Does a form with invariants t represent the nonzero rational a?
// Equivalent to isotropy of t + <-a> at every place of interest.
inline bool represents(const FormInvariants& t, const Rat& a) {
  FormInvariants u;  // invariants of t + <-a>
  u.dim = t.dim + 1;
  u.disc = t.disc * -a;
  u.signature = t.signature;
  (a > 0 ? u.signature.second : u.signature.first)++;
  std::set<RationalPlace> places{RationalPlace::infinity(), RationalPlace::prime(Int(2))};
  for (const auto& [v, eps] : t.hasse) places.insert(v);
  for (const auto& p : odd_prime_support(a)) places.insert(RationalPlace::prime(p));
  for (const auto& v : places) {
    auto it = t.hasse.find(v);
    int eps = it == t.hasse.end() ? 1 : it->second;
    u.hasse[v] = eps * hilbert_symbol(t.disc, -a, v);
    if (!is_isotropic_local(u, v)) return false;
  }
  // places off the list are unit situations, isotropic in every dimension
  // that reaches here
  return true;
}

// Invariants of q' with q = <a> + q'; the Hasse chain rule is
// c(q) = c(q') * (a, disc q')_v.
inline FormInvariants peel(const FormInvariants& t, const Rat& a) {
  FormInvariants u;
  u.dim = t.dim - 1;
  u.disc = t.disc / a;
  u.signature = t.signature;
  (a > 0 ? u.signature.first : u.signature.second)--;
  for (const auto& [v, eps] : t.hasse)
    u.hasse[v] = eps * hilbert_symbol(a, u.disc, v);
  for (const auto& p : odd_prime_support(a)) {
    RationalPlace v = RationalPlace::prime(p);
    if (!u.hasse.count(v)) u.hasse[v] = hilbert_symbol(a, u.disc, v);
  }
  return u;
}

// Candidate square classes supported on -1 and the given primes, by
// ascending complexity, then with one auxiliary prime appended.
inline std::vector<Rat> candidate_classes(const std::set<Int>& primes) {
  std::vector<Int> ps(primes.begin(), primes.end());
  if (ps.size() > 16)
    throw validation_error("form synthesis: prime support too large (> 16 primes)");
  std::vector<Rat> out;
  for (unsigned mask = 0; mask < (1u << ps.size()); ++mask) {
    Rat x = 1;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (mask & (1u << i)) x *= ps[i];
    out.push_back(x);
    out.push_back(-x);
  }
  std::sort(out.begin(), out.end(), [](const Rat& x, const Rat& y) {
    Rat ax = x < 0 ? Rat(-x) : x, ay = y < 0 ? Rat(-y) : y;
    return ax != ay ? ax < ay : x > y;
  });
  return out;
}

}  // namespace detail

// A diagonal form realizing the tuple, or nullopt when no rational form
// does. Search is over square classes supported on the relevant primes,
// extended by small auxiliary primes when needed.
inline std::optional<QuadraticForm> diagonal_form_from_invariants(const FormInvariants& t) {
  if (t.dim == 0) throw validation_error("synthesis needs positive dimension");
  if (t.signature.first + t.signature.second != t.dim) return std::nullopt;
  if (t.disc == 0) return std::nullopt;
  if ((t.disc > 0) != (t.signature.second % 2 == 0)) return std::nullopt;

  if (t.dim == 1) {
    for (const auto& [v, eps] : t.hasse)
      if (eps != 1) return std::nullopt;
    return QuadraticForm({t.disc});
  }

  std::set<Int> support{Int(2)};
  for (const auto& p : odd_prime_support(t.disc)) support.insert(p);
  for (const auto& [v, eps] : t.hasse)
    if (!v.real()) support.insert(v.p);

  auto try_coefficient = [&](const Rat& a) -> std::optional<QuadraticForm> {
    if (!detail::represents(t, a)) return std::nullopt;
    auto rest = diagonal_form_from_invariants(detail::peel(t, a));
    if (!rest) return std::nullopt;
    std::vector<Rat> coeffs{a};
    for (const auto& c : rest->coefficients()) coeffs.push_back(c);
    return QuadraticForm(std::move(coeffs));
  };

  if (t.dim >= 4) {
    // any sign present in the signature is represented at this dimension
    if (auto q = try_coefficient(Rat(t.signature.first > 0 ? 1 : -1))) return q;
  }
  for (const auto& a : detail::candidate_classes(support))
    if (auto q = try_coefficient(a)) return q;
  // one auxiliary prime outside the support (Dirichlet gives one; the scan
  // is bounded for sanity)
  for (Int aux = 3; aux < 3000; ++aux) {
    if (!is_prime(aux) || support.count(aux)) continue;
    std::set<Int> widened = support;
    widened.insert(aux);
    for (const auto& a : detail::candidate_classes(widened))
      if (auto q = try_coefficient(a)) return q;
    break;
  }
  return std::nullopt;
}

}  // namespace titsmotive

#endif
