#include "hoffgraph/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>

#include "hoffgraph/errors.hpp"

namespace hoffgraph {

namespace {

using Cells = std::vector<std::vector<int>>;

class Canonizer {
 public:
  Canonizer(const Graph& g, std::span<const int> colors) : n_(g.order()), adj_(g.order(), 0) {
    for (std::size_t v = 0; v < n_; ++v)
      g.neighbors(static_cast<int>(v)).for_each([&](std::size_t w) { adj_[v] |= std::uint64_t{1} << w; });

    std::map<int, std::vector<int>> by_color;
    for (std::size_t v = 0; v < n_; ++v) by_color[colors.empty() ? 0 : colors[v]].push_back(static_cast<int>(v));
    header_ = std::to_string(n_) + ":";
    for (auto& [c, vs] : by_color) {
      header_ += std::to_string(c) + "x" + std::to_string(vs.size()) + ",";
      root_.push_back(std::move(vs));
    }
    header_ += "|";
  }

  CanonicalForm run() {
    std::vector<int> prefix;
    search(root_, prefix);
    CanonicalForm out;
    out.labeling = best_pos_;
    out.certificate = header_ + best_;
    return out;
  }

 private:
  std::uint64_t mask_of(const std::vector<int>& cell) const {
    std::uint64_t m = 0;
    for (int v : cell) m |= std::uint64_t{1} << v;
    return m;
  }

  // Refine to the coarsest equitable partition finer than `cells`, splitting
  // each cell by neighbour counts into the current splitter cell, smallest
  // count first. The procedure only looks at cell positions and counts, so
  // it commutes with isomorphisms.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t w = 0; w < cells.size(); ++w) {
        const std::uint64_t splitter = mask_of(cells[w]);
        for (std::size_t x = 0; x < cells.size(); ++x) {
          auto& cell = cells[x];
          if (cell.size() == 1) continue;
          std::vector<std::pair<int, int>> keyed;
          keyed.reserve(cell.size());
          for (int v : cell) keyed.emplace_back(std::popcount(adj_[static_cast<std::size_t>(v)] & splitter), v);
          std::stable_sort(keyed.begin(), keyed.end(), [](auto& a, auto& b) { return a.first < b.first; });
          if (keyed.front().first == keyed.back().first) continue;
          Cells pieces;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
            pieces.back().push_back(keyed[i].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
          x += pieces.size() - 1;
          changed = true;
        }
      }
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> pos(n_), inv(n_);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      pos[static_cast<std::size_t>(cells[i][0])] = static_cast<int>(i);
      inv[i] = cells[i][0];
    }
    std::string cert((n_ * (n_ - 1) / 2 + 7) / 8, '\0');
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const auto row = adj_[static_cast<std::size_t>(inv[i])];
      for (std::size_t j = i + 1; j < n_; ++j, ++bit)
        if ((row >> inv[j]) & 1u) cert[bit >> 3] = static_cast<char>(cert[bit >> 3] | (0x80 >> (bit & 7)));
    }
    if (best_pos_.empty() || cert > best_) {
      best_ = std::move(cert);
      best_pos_ = std::move(pos);
      best_inv_ = std::move(inv);
    } else if (cert == best_) {
      std::vector<int> gamma(n_);
      bool identity = true;
      for (std::size_t v = 0; v < n_; ++v) {
        gamma[v] = best_inv_[static_cast<std::size_t>(pos[v])];
        identity = identity && gamma[v] == static_cast<int>(v);
      }
      if (!identity && automorphisms_.size() < 256) automorphisms_.push_back(std::move(gamma));
    }
  }

  // Union-find orbits of the group generated by stored automorphisms that
  // fix every vertex of `prefix`.
  std::vector<int> stabilizer_orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      return a;
    };
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return gamma[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        const int a = find(static_cast<int>(v)), b = find(gamma[v]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (std::size_t v = 0; v < n_; ++v) parent[v] = find(static_cast<int>(v));
    return parent;
  }

  void search(Cells cells, std::vector<int>& prefix) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const std::vector<int> candidates = cells[target];
    std::vector<int> tried;
    std::size_t known = automorphisms_.size();
    std::vector<int> orbit = stabilizer_orbits(prefix);
    for (int v : candidates) {
      if (automorphisms_.size() != known) {
        known = automorphisms_.size();
        orbit = stabilizer_orbits(prefix);
      }
      if (std::any_of(tried.begin(), tried.end(), [&](int w) { return orbit[static_cast<std::size_t>(w)] == orbit[static_cast<std::size_t>(v)]; }))
        continue;
      tried.push_back(v);
      Cells child = cells;
      std::vector<int> rest;
      for (int w : cells[target])
        if (w != v) rest.push_back(w);
      child[target] = {v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, std::move(rest));
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  Cells root_;
  std::string header_;
  std::string best_;
  std::vector<int> best_pos_, best_inv_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
  if (g.order() > kCanonicalOrderCap)
    throw unsupported_size("canonical_form: order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(kCanonicalOrderCap));
  if (!colors.empty() && colors.size() != g.order()) throw std::invalid_argument("canonical_form: colour count does not match order");
  return Canonizer(g, colors).run();
}

Graph relabel(const Graph& g, std::span<const int> labeling) {
  if (labeling.size() != g.order()) throw std::invalid_argument("relabel: labeling size does not match order");
  Graph out(g.order(), g.label());
  for (auto [u, v] : g.edges()) out.add_edge(labeling[static_cast<std::size_t>(u)], labeling[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace hoffgraph
