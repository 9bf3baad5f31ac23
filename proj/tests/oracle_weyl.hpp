#ifndef TITSMOTIVE_TESTS_ORACLE_WEYL_HPP
#define TITSMOTIVE_TESTS_ORACLE_WEYL_HPP

// Brute-force Weyl group oracle, independent of the library's closed-form
// degree products. Builds the root system from simple roots in standard
// coordinates, enumerates the group as permutations of the roots by BFS
// (depth = reduced word length), and derives Poincare series from length
// histograms. Only feasible for small ranks, which is the point: it
// cross-checks the formulas on the cheap cases.

#include <titsmotive/diagram.hpp>
#include <titsmotive/poly.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using titsmotive::Component;
using titsmotive::Int;
using titsmotive::Poly;
using titsmotive::Rat;
using titsmotive::Series;

class WeylOracle {
 public:
  explicit WeylOracle(const Component& c) {
    std::vector<std::vector<Rat>> simples = simple_roots(c);
    rank_ = simples.size();
    // close the simple roots under simple reflections
    std::vector<std::vector<Rat>> roots = simples;
    std::set<std::vector<Rat>> seen(roots.begin(), roots.end());
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (const auto& alpha : simples) {
        auto r = reflect(roots[i], alpha);
        if (seen.insert(r).second) roots.push_back(r);
      }
    roots_ = std::move(roots);
    std::sort(roots_.begin(), roots_.end());

    // simple reflections as permutations of the root list
    std::map<std::vector<Rat>, int> index;
    for (std::size_t i = 0; i < roots_.size(); ++i) index[roots_[i]] = static_cast<int>(i);
    for (const auto& alpha : simples) {
      std::vector<int> perm(roots_.size());
      for (std::size_t i = 0; i < roots_.size(); ++i) perm[i] = index.at(reflect(roots_[i], alpha));
      simple_perms_.push_back(std::move(perm));
    }

    // BFS over the group; depth is the word length
    std::vector<int> id(roots_.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    std::map<std::vector<int>, int> len{{id, 0}};
    std::vector<std::vector<int>> queue{id};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int l = len.at(queue[qi]);
      for (const auto& s : simple_perms_) {
        std::vector<int> next(roots_.size());
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = queue[qi][s[i]];
        if (len.emplace(next, l + 1).second) queue.push_back(next);
      }
    }
    for (auto& [w, l] : len) {
      elements_.push_back(w);
      lengths_.push_back(l);
    }
  }

  std::size_t order() const { return elements_.size(); }

  Poly length_poincare() const {
    std::vector<Int> hist;
    for (int l : lengths_) {
      if (static_cast<std::size_t>(l) >= hist.size()) hist.resize(l + 1, Int(0));
      ++hist[l];
    }
    return Poly(hist);
  }

  // Minimal coset-representative lengths for W / W_J, J given by Bourbaki
  // numbers (1-based) of the generating simple reflections.
  Poly coset_poincare(const std::set<unsigned>& j) const {
    for (unsigned b : j)
      if (b < 1 || b > rank_) throw std::logic_error("oracle: bad subgroup generator");
    // elements of W_J by BFS
    std::vector<int> id(roots_.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    std::set<std::vector<int>> sub{id};
    std::vector<std::vector<int>> queue{id};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (unsigned b : j) {
        const auto& s = simple_perms_[b - 1];
        std::vector<int> next(roots_.size());
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = queue[qi][s[i]];
        if (sub.insert(next).second) queue.push_back(next);
      }
    // group the elements of W into left cosets w * W_J and take min lengths
    std::map<std::vector<int>, int> min_len;
    for (std::size_t ei = 0; ei < elements_.size(); ++ei) {
      std::vector<int> key;
      for (const auto& u : sub) {
        std::vector<int> wu(roots_.size());
        for (std::size_t i = 0; i < wu.size(); ++i) wu[i] = elements_[ei][u[i]];
        if (key.empty() || wu < key) key = std::move(wu);
      }
      auto [it, fresh] = min_len.emplace(key, lengths_[ei]);
      if (!fresh) it->second = std::min(it->second, lengths_[ei]);
    }
    std::vector<Int> hist;
    for (auto& [key, l] : min_len) {
      if (static_cast<std::size_t>(l) >= hist.size()) hist.resize(l + 1, Int(0));
      ++hist[l];
    }
    return Poly(hist);
  }

 private:
  static std::vector<Rat> reflect(const std::vector<Rat>& v, const std::vector<Rat>& alpha) {
    Rat va = 0, aa = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      va += v[i] * alpha[i];
      aa += alpha[i] * alpha[i];
    }
    Rat c = 2 * va / aa;
    std::vector<Rat> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] - c * alpha[i];
    return out;
  }

  static std::vector<std::vector<Rat>> simple_roots(const Component& c) {
    unsigned n = c.rank;
    auto e = [&](unsigned dim, unsigned i) {
      std::vector<Rat> v(dim, Rat(0));
      v[i - 1] = 1;
      return v;
    };
    auto diff = [&](unsigned dim, unsigned i, unsigned k) {
      std::vector<Rat> v(dim, Rat(0));
      v[i - 1] = 1;
      v[k - 1] = -1;
      return v;
    };
    std::vector<std::vector<Rat>> s;
    switch (c.series) {
      case Series::A:
        for (unsigned i = 1; i <= n; ++i) s.push_back(diff(n + 1, i, i + 1));
        break;
      case Series::B:
        for (unsigned i = 1; i < n; ++i) s.push_back(diff(n, i, i + 1));
        s.push_back(e(n, n));
        break;
      case Series::C: {
        for (unsigned i = 1; i < n; ++i) s.push_back(diff(n, i, i + 1));
        auto last = e(n, n);
        last[n - 1] = 2;
        s.push_back(last);
        break;
      }
      case Series::D: {
        for (unsigned i = 1; i < n; ++i) s.push_back(diff(n, i, i + 1));
        auto last = e(n, n - 1);
        last[n - 1] = 1;
        s.push_back(last);
        break;
      }
      case Series::F: {
        // alpha1 = e2-e3, alpha2 = e3-e4, alpha3 = e4, alpha4 = (e1-e2-e3-e4)/2
        s.push_back(diff(4, 2, 3));
        s.push_back(diff(4, 3, 4));
        s.push_back(e(4, 4));
        s.push_back({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
        break;
      }
      case Series::G: {
        // alpha1 = e1-e2, alpha2 = -2e1+e2+e3
        s.push_back(diff(3, 1, 2));
        s.push_back({Rat(-2), Rat(1), Rat(1)});
        break;
      }
      case Series::E:
        throw std::logic_error("oracle: E-series not supported (too large)");
    }
    return s;
  }

  unsigned rank_ = 0;
  std::vector<std::vector<Rat>> roots_;
  std::vector<std::vector<int>> simple_perms_;
  std::vector<std::vector<int>> elements_;
  std::vector<int> lengths_;
};

// Product over components; theta holds global vertex ids of the diagram.
inline Poly flag_poincare_oracle(const titsmotive::DynkinDiagram& d,
                                 const titsmotive::VertexSet& theta) {
  Poly p = Poly::one();
  for (std::size_t ci = 0; ci < d.component_count(); ++ci) {
    std::set<unsigned> kept;
    for (unsigned b = 1; b <= d.component(ci).rank; ++b)
      if (!theta.count(d.vertex_id(ci, b))) kept.insert(b);
    p = p * WeylOracle(d.component(ci)).coset_poincare(kept);
  }
  return p;
}

inline Poly weyl_poincare_oracle(const titsmotive::DynkinDiagram& d) {
  Poly p = Poly::one();
  for (const auto& c : d.components()) p = p * WeylOracle(c).length_poincare();
  return p;
}

}  // namespace oracle

#endif
