#pragma once

// Ordered simplicial complexes on the vertex set [n] = {0,…,n}.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "randotop/errors.hpp"

namespace randotop {

using Face = std::vector<std::size_t>;  // strictly increasing, nonempty

class SimplicialComplex {
 public:
  // Downward closure of the given faces; each face is sorted and deduplicated first.
  SimplicialComplex(std::size_t vertex_count, const std::vector<Face>& generators) : vertex_count_(vertex_count) {
    for (Face f : generators) {
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
      if (f.empty()) throw invariant_error("faces must be nonempty");
      if (f.back() >= vertex_count_) throw domain_error("face vertex " + std::to_string(f.back()) + " out of range");
      if (f.size() > 20) throw domain_error("face too large to close downward");
      for (unsigned long mask = 1; mask < (1UL << f.size()); ++mask) {
        Face sub;
        for (std::size_t b = 0; b < f.size(); ++b) {
          if (mask & (1UL << b)) sub.push_back(f[b]);
        }
        faces_.insert(std::move(sub));
      }
    }
  }

  // 𝒫*([n]): every nonempty subset of [n].
  static SimplicialComplex full_simplex(std::size_t n) {
    Face all(n + 1);
    for (std::size_t i = 0; i <= n; ++i) all[i] = i;
    return SimplicialComplex(n + 1, {all});
  }

  std::size_t vertex_count() const { return vertex_count_; }
  const std::set<Face>& faces() const { return faces_; }

  // Accepts any vertex list; repeats are ignored.
  bool contains(Face f) const {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return faces_.count(f) > 0;
  }

  std::vector<Face> maximal_faces() const {
    std::vector<Face> out;
    for (const auto& f : faces_) {
      bool maximal = true;
      for (const auto& g : faces_) {
        if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(f);
    }
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.faces_ == b.faces_;
  }

 private:
  std::size_t vertex_count_;
  std::set<Face> faces_;
};

}  // namespace randotop
