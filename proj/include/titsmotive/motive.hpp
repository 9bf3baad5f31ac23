#pragma once

// Symbolic Krull-Schmidt calculus for motives of flag varieties: upper
// motive labels, characteristic maps, slices, split decompositions, and the
// reconstruction identity over extension models.

#include <titsmotive/arith.hpp>
#include <titsmotive/diagram.hpp>

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

namespace titsmotive {

// Names one upper motive. Two labels with the same class id denote
// isomorphic motives; class ids are assigned elsewhere and are opaque here.
// The split Tate motive carries the reserved class id "split".
struct UpperMotiveLabel {
  std::string group;
  VertexSet theta;
  Int p{0};
  std::string class_id;

  static const std::string& split_class() {
    static const std::string s = "split";
    return s;
  }
  static UpperMotiveLabel tate() {
    UpperMotiveLabel l;
    l.class_id = split_class();
    return l;
  }
  bool is_tate() const { return *this == tate(); }

  friend bool operator==(const UpperMotiveLabel& x, const UpperMotiveLabel& y) {
    return x.group == y.group && x.theta == y.theta && x.p == y.p &&
           x.class_id == y.class_id;
  }
  friend bool operator<(const UpperMotiveLabel& x, const UpperMotiveLabel& y) {
    if (x.group != y.group) return x.group < y.group;
    if (x.theta != y.theta) return x.theta < y.theta;
    if (x.p != y.p) return x.p < y.p;
    return x.class_id < y.class_id;
  }
};

// A finite multiset of shifted upper motives.
class Motive {
 public:
  using Term = std::pair<UpperMotiveLabel, unsigned>;  // (label, shift)

  Motive() = default;

  void add(const UpperMotiveLabel& label, unsigned shift, unsigned long long mult = 1) {
    if (mult == 0) return;
    terms_[{label, shift}] += mult;
  }
  void add(const Motive& other) {
    for (const auto& [term, mult] : other.terms_) terms_[term] += mult;
  }

  const std::map<Term, unsigned long long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  unsigned long long total_multiplicity() const {
    unsigned long long n = 0;
    for (const auto& [term, mult] : terms_) n += mult;
    return n;
  }

  std::optional<unsigned> min_shift() const {
    std::optional<unsigned> out;
    for (const auto& [term, mult] : terms_)
      if (!out || term.second < *out) out = term.second;
    return out;
  }

  Motive shifted(unsigned by) const {
    Motive out;
    for (const auto& [term, mult] : terms_) out.add(term.first, term.second + by, mult);
    return out;
  }

 private:
  std::map<Term, unsigned long long> terms_;
};

inline void validate_motive(const Motive& m) {
  std::map<std::tuple<std::string, VertexSet, Int>, std::string> seen;
  for (const auto& [term, mult] : m.terms()) {
    const auto& l = term.first;
    auto [it, inserted] = seen.emplace(std::make_tuple(l.group, l.theta, l.p), l.class_id);
    if (!inserted && it->second != l.class_id)
      throw validation_error("labels with equal (group, theta, p) carry different class ids");
  }
}

// Counts direct summands by (class id, shift).
struct CharacteristicMap {
  std::map<std::pair<std::string, unsigned>, unsigned long long> counts;

  unsigned long long at(const std::string& cls, unsigned shift) const {
    auto it = counts.find({cls, shift});
    return it == counts.end() ? 0 : it->second;
  }
  friend bool operator==(const CharacteristicMap&, const CharacteristicMap&) = default;
};

inline CharacteristicMap chi(const Motive& m) {
  CharacteristicMap out;
  for (const auto& [term, mult] : m.terms())
    out.counts[{term.first.class_id, term.second}] += mult;
  return out;
}

// Motives compare through their characteristic maps: labels with one class
// id are isomorphic, so the map determines the motive.
inline bool operator==(const Motive& x, const Motive& y) { return chi(x) == chi(y); }
inline bool operator!=(const Motive& x, const Motive& y) { return !(x == y); }

enum class SliceMode { AtLeast, AtMost, Above, Below };

inline Motive slice(const Motive& m, long i, SliceMode mode) {
  Motive out;
  for (const auto& [term, mult] : m.terms()) {
    long s = static_cast<long>(term.second);
    bool keep = false;
    switch (mode) {
      case SliceMode::AtLeast: keep = s >= i; break;
      case SliceMode::AtMost: keep = s <= i; break;
      case SliceMode::Above: keep = s > i; break;
      case SliceMode::Below: keep = s < i; break;
    }
    if (keep) out.add(term.first, term.second, mult);
  }
  return out;
}

// The motive of a split flag variety: Tate summands with the Poincare
// polynomial of the variety as multiplicities.
inline Motive split_motive(const DynkinDiagram& d, const VertexSet& theta) {
  Poly poincare = flag_poincare(d, theta);
  const Int cap = std::numeric_limits<unsigned long long>::max();
  Motive out;
  const auto& coeffs = poincare.coefficients();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    if (coeffs[j] > cap) throw validation_error("split motive multiplicity overflows");
    out.add(UpperMotiveLabel::tate(), static_cast<unsigned>(j),
            coeffs[j].convert_to<unsigned long long>());
  }
  return out;
}

// Images of upper motives over some field extension, keyed by class id and
// extended additively and shift equivariantly.
struct ExtensionModel {
  std::map<std::string, Motive> images;
};

inline void validate_model(const ExtensionModel& e) {
  for (const auto& [cls, image] : e.images) validate_motive(image);
  auto it = e.images.find(UpperMotiveLabel::split_class());
  if (it != e.images.end()) {
    Motive tate_zero;
    tate_zero.add(UpperMotiveLabel::tate(), 0);
    if (!(it->second == tate_zero))
      throw validation_error("extension model must fix the split Tate class");
  }
}

inline Motive restrict(const Motive& m, const ExtensionModel& e) {
  Motive out;
  for (const auto& [term, mult] : m.terms()) {
    auto it = e.images.find(term.first.class_id);
    if (it == e.images.end())
      throw validation_error("extension model lacks an image for class '" +
                             term.first.class_id + "'");
    for (const auto& [image_term, image_mult] : it->second.terms())
      out.add(image_term.first, image_term.second + term.second, image_mult * mult);
  }
  return out;
}

// The reconstruction identity: the multiplicity of U_Y[i] in M(X) equals the
// multiplicity of U_{Y_E}[i] in M(X_E) minus its multiplicity in the
// restriction of the strictly lower slice. U_{Y_E} is read off as the least
// shift zero class in the image of U_Y.
inline bool check_calcul(const Motive& mX, const ExtensionModel& e,
                         const UpperMotiveLabel& yLabel, long i) {
  validate_model(e);
  auto it = e.images.find(yLabel.class_id);
  if (it == e.images.end())
    throw validation_error("extension model lacks an image for class '" +
                           yLabel.class_id + "'");
  std::optional<std::string> ye;
  for (const auto& [term, mult] : it->second.terms())
    if (term.second == 0 && (!ye || term.first.class_id < *ye)) ye = term.first.class_id;
  if (!ye)
    throw validation_error("image of class '" + yLabel.class_id +
                           "' has no shift zero part");
  if (i < 0) return true;
  unsigned ui = static_cast<unsigned>(i);

  long long lhs = static_cast<long long>(chi(mX).at(yLabel.class_id, ui));
  long long over = static_cast<long long>(chi(restrict(mX, e)).at(*ye, ui));
  long long lower =
      static_cast<long long>(chi(restrict(slice(mX, i, SliceMode::Below), e)).at(*ye, ui));
  return lhs == over - lower;
}

}  // namespace titsmotive
