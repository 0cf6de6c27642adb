#include "flagtilt/toric.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "flagtilt/concurrent.hpp"
#include "flagtilt/error.hpp"

namespace flagtilt {

namespace {

std::vector<MultiDegree> sorted_bundle(std::vector<MultiDegree> b) {
  std::sort(b.begin(), b.end());
  return b;
}

MultiDegree plus(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

TowerSpec::TowerSpec(std::size_t base_dim, std::vector<TowerLevel> levels)
    : base_dim_(base_dim), levels_(std::move(levels)) {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& level = levels_[i];
    const std::string where = "level " + std::to_string(i + 1);
    if (level.bundles.empty()) throw InvalidTower(where + " has no bundles");
    const std::size_t rank = level.bundles.front().size();
    const std::size_t width = picard_rank(i);
    for (const auto& bundle : level.bundles) {
      if (bundle.empty()) throw InvalidTower(where + " has a bundle with no summands");
      if (bundle.size() != rank) throw InvalidTower(where + " mixes bundles of different rank");
      for (const auto& summand : bundle) {
        if (summand.size() != width) {
          throw InvalidTower(where + ": summand twists need " + std::to_string(width) +
                             " coordinates, got " + std::to_string(summand.size()));
        }
        for (const auto& x : summand) {
          if (x < 0) throw InvalidTower(where + " has a summand with a negative twist");
        }
      }
    }
    for (std::size_t g = 0; g < level.perms.size(); ++g) {
      const auto& perm = level.perms[g];
      const std::string gen = where + " generator " + std::to_string(g + 1);
      if (perm.size() != level.bundles.size()) {
        throw InvalidTower(gen + " has the wrong length");
      }
      std::vector<std::size_t> seen(perm);
      std::sort(seen.begin(), seen.end());
      for (std::size_t k = 0; k < seen.size(); ++k) {
        if (seen[k] != k) throw InvalidTower(gen + " is not a permutation");
      }
      for (std::size_t k = 0; k < perm.size(); ++k) {
        if (sorted_bundle(level.bundles[k]) != sorted_bundle(level.bundles[perm[k]])) {
          throw InvalidTower(gen + " exchanges bundles with different twists");
        }
      }
    }
  }
  // Generators act on the twists of the bundles above their level; they must
  // fix those bundles so that the grid action stays a permutation of factors.
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (std::size_t g = 0; g < levels_[i].perms.size(); ++g) {
      for (std::size_t h = i + 1; h < levels_.size(); ++h) {
        for (const auto& bundle : levels_[h].bundles) {
          std::vector<MultiDegree> moved;
          for (const auto& summand : bundle) {
            MultiDegree padded(summand);
            padded.resize(picard_rank(), 0);
            padded = act(i, g, padded);
            padded.resize(summand.size());
            moved.push_back(padded);
          }
          if (sorted_bundle(moved) != sorted_bundle(bundle)) {
            throw InvalidTower("level " + std::to_string(i + 1) + " generator " +
                               std::to_string(g + 1) + " moves a bundle of level " +
                               std::to_string(h + 1));
          }
        }
      }
    }
  }
}

std::size_t TowerSpec::picard_rank(std::size_t stage) const {
  std::size_t r = base_dim_ > 0 ? 1 : 0;
  for (std::size_t i = 0; i < stage; ++i) r += levels_.at(i).bundles.size();
  return r;
}

std::size_t TowerSpec::fibre_dim(std::size_t level) const {
  return levels_.at(level).bundles.front().size() - 1;
}

std::size_t TowerSpec::dimension() const {
  std::size_t d = base_dim_;
  for (std::size_t i = 0; i < levels_.size(); ++i) d += fibre_dim(i) * levels_[i].bundles.size();
  return d;
}

Int TowerSpec::grid_size() const {
  Int size = base_dim_ + 1;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (std::size_t k = 0; k < levels_[i].bundles.size(); ++k) size *= fibre_dim(i) + 1;
  }
  return size;
}

MultiDegree TowerSpec::act(std::size_t level, std::size_t generator,
                           const MultiDegree& d) const {
  const auto& perm = levels_.at(level).perms.at(generator);
  const std::size_t off = offset(level);
  MultiDegree out(d);
  for (std::size_t k = 0; k < perm.size(); ++k) out[off + perm[k]] = d[off + k];
  return out;
}

namespace {

using Spread = std::map<MultiDegree, Int>;

// Sym^t of the split bundle with the given summands.
Spread symmetric_power(const std::vector<MultiDegree>& summands, const Int& t) {
  const std::size_t width = summands.front().size();
  Spread out;
  MultiDegree acc(width, 0);
  std::function<void(std::size_t, Int)> place = [&](std::size_t j, Int left) {
    if (j + 1 == summands.size()) {
      MultiDegree d(acc);
      for (std::size_t c = 0; c < width; ++c) d[c] += left * summands[j][c];
      out[d] += 1;
      return;
    }
    for (Int a = 0; a <= left; ++a) {
      for (std::size_t c = 0; c < width; ++c) acc[c] += a * summands[j][c];
      place(j + 1, left - a);
      for (std::size_t c = 0; c < width; ++c) acc[c] -= a * summands[j][c];
    }
  };
  place(0, t);
  return out;
}

struct Pushforward {
  std::size_t degree = 0;
  Spread terms;
};

// R p_* O(t) for p : P(E) -> base, E split with the given summands.
std::optional<Pushforward> push_factor(const std::vector<MultiDegree>& summands, const Int& t) {
  const Int rank = summands.size();
  if (t >= 0) return Pushforward{0, symmetric_power(summands, t)};
  if (t > -rank) return std::nullopt;
  std::vector<MultiDegree> dual;
  MultiDegree det(summands.front().size(), 0);
  for (const auto& s : summands) {
    MultiDegree neg(s);
    for (auto& x : neg) x = -x;
    det = plus(det, neg);
    dual.push_back(std::move(neg));
  }
  Pushforward p{summands.size() - 1, {}};
  for (const auto& [d, m] : symmetric_power(dual, -t - rank)) p.terms[plus(d, det)] += m;
  return p;
}

class Evaluator {
 public:
  explicit Evaluator(const TowerSpec& tower) : tower_(tower) {}

  std::map<std::size_t, Int> run(std::size_t stage, const MultiDegree& d) {
    auto key = std::make_pair(stage, d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::map<std::size_t, Int> out = stage == 0 ? base(d) : step(stage, d);
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  std::map<std::size_t, Int> base(const MultiDegree& d) {
    const std::size_t r = tower_.base_dim();
    if (r == 0) return {{0, 1}};
    const Int& a = d.front();
    if (a >= 0) return {{0, binomial(a + r, static_cast<long>(r))}};
    if (a <= -Int(r) - 1) return {{r, binomial(-a - 1, static_cast<long>(r))}};
    return {};
  }

  std::map<std::size_t, Int> step(std::size_t stage, const MultiDegree& d) {
    const std::size_t level = stage - 1;
    const std::size_t off = tower_.offset(level);
    const auto& bundles = tower_.levels()[level].bundles;
    std::map<std::pair<std::size_t, MultiDegree>, Int> acc{
        {{0, MultiDegree(d.begin(), d.begin() + static_cast<long>(off))}, 1}};
    for (std::size_t k = 0; k < bundles.size(); ++k) {
      auto p = push_factor(bundles[k], d[off + k]);
      if (!p) return {};
      std::map<std::pair<std::size_t, MultiDegree>, Int> next;
      for (const auto& [key, m] : acc) {
        for (const auto& [md, mult] : p->terms) {
          next[{key.first + p->degree, plus(key.second, md)}] += m * mult;
        }
      }
      acc = std::move(next);
    }
    std::map<std::size_t, Int> out;
    for (const auto& [key, m] : acc) {
      for (const auto& [deg, h] : run(stage - 1, key.second)) out[deg + key.first] += m * h;
    }
    return out;
  }

  const TowerSpec& tower_;
  std::map<std::pair<std::size_t, MultiDegree>, std::map<std::size_t, Int>> memo_;
};

}  // namespace

std::map<std::size_t, Int> line_bundle_cohomology(const TowerSpec& tower, const MultiDegree& d) {
  if (d.size() != tower.picard_rank()) {
    throw RankMismatch("multidegree needs " + std::to_string(tower.picard_rank()) +
                       " coordinates, got " + std::to_string(d.size()));
  }
  Evaluator ev(tower);
  return ev.run(tower.levels().size(), d);
}

Int toric_euler(const TowerSpec& tower, const MultiDegree& d) {
  Int chi = 0;
  for (const auto& [deg, h] : line_bundle_cohomology(tower, d)) chi += deg % 2 == 0 ? h : -h;
  return chi;
}

std::vector<MultiDegree> grid(const TowerSpec& tower) {
  std::vector<std::size_t> range;
  if (tower.base_dim() > 0) range.push_back(tower.base_dim());
  for (std::size_t i = 0; i < tower.levels().size(); ++i) {
    range.insert(range.end(), tower.levels()[i].bundles.size(), tower.fibre_dim(i));
  }
  std::vector<MultiDegree> out;
  MultiDegree cur(range.size());
  std::function<void(std::size_t)> fill = [&](std::size_t pos) {
    if (pos == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = range[pos - 1] + 1; v-- > 0;) {
      cur[pos - 1] = -Int(v);
      fill(pos - 1);
    }
  };
  fill(range.size());
  return out;
}

GridReport check_grid_collection(const TowerSpec& tower, unsigned jobs) {
  GridReport report;
  report.members = grid(tower);
  const std::size_t n = report.members.size();
  report.pairs.resize(n * n);
  parallel_for(n * n, jobs, [&](std::size_t k) {
    GridPair p;
    p.source = k / n;
    p.target = k % n;
    MultiDegree diff(report.members[p.target]);
    for (std::size_t c = 0; c < diff.size(); ++c) diff[c] -= report.members[p.source][c];
    p.ext = line_bundle_cohomology(tower, diff);
    if (auto it = p.ext.find(0); it != p.ext.end()) p.hom_dim = it->second;
    const bool higher = std::any_of(p.ext.begin(), p.ext.end(),
                                    [](const auto& e) { return e.first > 0 && e.second != 0; });
    p.higher_ext_status = higher ? Verdict::Refuted : Verdict::Confirmed;
    if (p.source == p.target) {
      p.hom_status = p.hom_dim == 1 ? Verdict::Confirmed : Verdict::Refuted;
    } else if (p.source > p.target) {
      p.hom_status = p.ext.empty() ? Verdict::Confirmed : Verdict::Refuted;
    }
    report.pairs[k] = std::move(p);
  });
  for (const auto& p : report.pairs) {
    report.overall = combine(report.overall, p.higher_ext_status);
    if (p.hom_status) report.overall = combine(report.overall, *p.hom_status);
  }
  return report;
}

OrbitReport galois_orbit_check(const TowerSpec& tower) {
  OrbitReport report;
  const auto members = grid(tower);
  std::map<MultiDegree, std::size_t> index;
  for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i], i);

  std::vector<std::size_t> orbit_of(members.size(), members.size());
  for (std::size_t start = 0; start < members.size(); ++start) {
    if (orbit_of[start] != members.size()) continue;
    const std::size_t id = report.orbit_classes.size();
    std::set<std::size_t> found{start};
    std::vector<std::size_t> frontier{start};
    orbit_of[start] = id;
    while (!frontier.empty()) {
      const std::size_t cur = frontier.back();
      frontier.pop_back();
      for (std::size_t level = 0; level < tower.levels().size(); ++level) {
        for (std::size_t g = 0; g < tower.levels()[level].perms.size(); ++g) {
          auto it = index.find(tower.act(level, g, members[cur]));
          if (it == index.end()) {
            report.orbit_closed = false;
            continue;
          }
          if (found.insert(it->second).second) {
            orbit_of[it->second] = id;
            frontier.push_back(it->second);
          }
        }
      }
    }
    std::vector<MultiDegree> cls;
    for (std::size_t i : found) cls.push_back(members[i]);
    report.orbit_classes.push_back(std::move(cls));
  }
  return report;
}

}  // namespace flagtilt
