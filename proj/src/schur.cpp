#include "flagtilt/schur.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "flagtilt/concurrent.hpp"
#include "flagtilt/error.hpp"

namespace flagtilt {

CharacterSum CharacterSum::single(const GLWeight& w, const Int& mult) {
  CharacterSum s(w.rank());
  s.add(w, mult);
  return s;
}

Int CharacterSum::multiplicity(const GLWeight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

void CharacterSum::add(const GLWeight& w, const Int& mult) {
  if (w.rank() != rank_) {
    throw RankMismatch("weight of rank " + std::to_string(w.rank()) +
                       " added to a character of rank " + std::to_string(rank_));
  }
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

CharacterSum& CharacterSum::operator+=(const CharacterSum& other) {
  if (other.rank_ != rank_ && !other.empty()) {
    if (empty()) {
      rank_ = other.rank_;
    } else {
      throw RankMismatch("adding characters of different ranks");
    }
  }
  for (const auto& [w, m] : other.terms_) add(w, m);
  return *this;
}

CharacterSum& CharacterSum::operator-=(const CharacterSum& other) { return *this += -other; }

CharacterSum CharacterSum::operator-() const { return scaled(-1); }

CharacterSum CharacterSum::scaled(const Int& factor) const {
  CharacterSum out(rank_);
  if (factor == 0) return out;
  for (const auto& [w, m] : terms_) out.terms_.emplace(w, m * factor);
  return out;
}

bool CharacterSum::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

Int CharacterSum::dimension() const {
  Int total = 0;
  for (const auto& [w, m] : terms_) total += m * schur_dim(w, rank_);
  return total;
}

CharacterSum operator+(CharacterSum a, const CharacterSum& b) { return a += b; }
CharacterSum operator-(CharacterSum a, const CharacterSum& b) { return a -= b; }

namespace {

// Rows of a skew shape are filled in reading order: top to bottom, each row
// right to left. A filling is a Littlewood-Richardson tableau when rows weakly
// increase, columns strictly increase and every prefix of the reading word is
// a lattice word.
struct FilledRow {
  Int start;
  std::vector<int> values;
};

class LatticeFiller {
 public:
  // Labels run over 1..max_label; caps[x] bounds the number of x's (no bound
  // when caps is empty).
  LatticeFiller(int max_label, std::vector<long> caps)
      : max_label_(max_label), caps_(std::move(caps)), counts_(max_label + 2, 0) {}

  const std::vector<long>& counts() const { return counts_; }

  // Enumerates fillings of `row` (start and length fixed by the caller) under
  // the row `above` (may be null), calling next() for each.
  void fill(FilledRow& row, std::size_t len, const FilledRow* above,
            const std::function<void()>& next) {
    row.values.assign(len, 0);
    place(row, len, above, 0, next);
  }

 private:
  void place(FilledRow& row, std::size_t len, const FilledRow* above, std::size_t placed,
             const std::function<void()>& next) {
    if (placed == len) {
      next();
      return;
    }
    const std::size_t k = len - 1 - placed;
    int hi = placed == 0 ? max_label_ : row.values[k + 1];
    int lo = 1;
    if (above != nullptr) {
      const Int offset = row.start + Int(k) - above->start;
      if (offset >= 0 && offset < Int(above->values.size())) {
        lo = above->values[offset.convert_to<std::size_t>()] + 1;
      }
    }
    for (int x = lo; x <= hi; ++x) {
      if (x > 1 && counts_[x] + 1 > counts_[x - 1]) continue;
      if (!caps_.empty() && counts_[x] + 1 > caps_[x]) continue;
      ++counts_[x];
      row.values[k] = x;
      place(row, len, above, placed + 1, next);
      --counts_[x];
    }
  }

  int max_label_;
  std::vector<long> caps_;
  std::vector<long> counts_;
};

std::vector<Int> pad(const GLWeight& w, std::size_t rank) {
  std::vector<Int> e = w.entries();
  if (e.size() > rank) {
    for (std::size_t i = rank; i < e.size(); ++i) {
      if (e[i] != 0) {
        throw InvalidWeight("partition has more than " + std::to_string(rank) + " parts");
      }
    }
    e.resize(rank);
  }
  e.resize(rank, 0);
  return e;
}

void require_partition(const GLWeight& w) {
  if (!w.is_partition()) throw InvalidWeight("Littlewood-Richardson input is not a partition");
}

CharacterSum compute_lr(const std::vector<Int>& mu, const std::vector<Int>& nu, std::size_t m) {
  std::vector<long> caps{0};
  long boxes = 0;
  for (const auto& part : nu) {
    if (part == 0) break;
    caps.push_back(static_cast<long>(to_int64(part)));
    boxes += caps.back();
  }
  CharacterSum result(m);
  if (m == 0) {
    result.add(GLWeight{}, 1);
    return result;
  }
  LatticeFiller filler(static_cast<int>(caps.size()) - 1, caps);
  std::vector<FilledRow> rows(m);
  std::vector<std::size_t> lens(m, 0);

  std::function<void(std::size_t, long)> descend = [&](std::size_t r, long remaining) {
    if (remaining == 0) {
      std::vector<Int> lambda = mu;
      for (std::size_t i = 0; i < r; ++i) lambda[i] += Int(lens[i]);
      result.add(GLWeight(std::move(lambda)), 1);
      return;
    }
    if (r == m) return;
    Int bound = remaining;
    if (r > 0) bound = std::min(bound, Int(mu[r - 1] + Int(lens[r - 1]) - mu[r]));
    const long max_len = bound.convert_to<long>();
    rows[r].start = mu[r];
    const FilledRow* above = r > 0 ? &rows[r - 1] : nullptr;
    for (long len = 0; len <= max_len; ++len) {
      lens[r] = static_cast<std::size_t>(len);
      filler.fill(rows[r], lens[r], above, [&] { descend(r + 1, remaining - len); });
    }
    lens[r] = 0;
  };
  descend(0, boxes);
  return result;
}

ConcurrentCache<std::tuple<std::vector<Int>, std::vector<Int>, std::size_t>, CharacterSum>&
lr_cache() {
  static ConcurrentCache<std::tuple<std::vector<Int>, std::vector<Int>, std::size_t>, CharacterSum>
      cache;
  return cache;
}

ConcurrentCache<std::tuple<GLWeight, std::size_t, std::size_t>, std::vector<LeviTerm>>&
levi_cache() {
  static ConcurrentCache<std::tuple<GLWeight, std::size_t, std::size_t>, std::vector<LeviTerm>>
      cache;
  return cache;
}

// Partition shift making the last entry zero.
Int normalizing_shift(const GLWeight& w) { return w.rank() == 0 ? Int(0) : Int(-w.entries().back()); }

std::vector<LeviTerm> compute_levi(const GLWeight& alpha, std::size_t a, std::size_t b) {
  const std::size_t r = alpha.rank();
  const Int k = normalizing_shift(alpha);
  const std::vector<Int> outer = alpha.shifted(k).entries();

  std::map<std::pair<std::vector<Int>, std::vector<long>>, Int> tally;
  std::vector<Int> inner(r, 0);
  std::vector<FilledRow> rows(r);

  // Fill the skew shape outer/inner with any lattice content of <= b labels.
  auto fill_skew = [&] {
    LatticeFiller filler(static_cast<int>(b), {});
    std::function<void(std::size_t)> row_step = [&](std::size_t i) {
      if (i == r) {
        std::vector<long> content(filler.counts().begin() + 1,
                                  filler.counts().begin() + 1 + static_cast<std::ptrdiff_t>(b));
        tally[{inner, content}] += 1;
        return;
      }
      rows[i].start = inner[i];
      const Int len = outer[i] - inner[i];
      filler.fill(rows[i], to_size(len), i > 0 ? &rows[i - 1] : nullptr,
                  [&] { row_step(i + 1); });
    };
    if (b == 0) {
      if (inner == outer) tally[{inner, {}}] += 1;
      return;
    }
    row_step(0);
  };

  // inner ranges over partitions inside outer with at most a parts.
  std::function<void(std::size_t)> choose_inner = [&](std::size_t i) {
    if (i == r) {
      fill_skew();
      return;
    }
    if (i >= a) {
      inner[i] = 0;
      choose_inner(i + 1);
      return;
    }
    Int hi = outer[i];
    if (i > 0) hi = std::min(hi, inner[i - 1]);
    for (Int v = hi; v >= 0; --v) {
      inner[i] = v;
      choose_inner(i + 1);
    }
    inner[i] = 0;
  };
  choose_inner(0);

  std::vector<LeviTerm> terms;
  for (const auto& [key, mult] : tally) {
    std::vector<Int> sub(key.first.begin(), key.first.begin() + static_cast<std::ptrdiff_t>(a));
    std::vector<Int> quot(key.second.begin(), key.second.end());
    terms.push_back({GLWeight(std::move(sub)).shifted(-k), GLWeight(std::move(quot)).shifted(-k),
                     mult});
  }
  std::stable_sort(terms.begin(), terms.end(), [&](const LeviTerm& x, const LeviTerm& y) {
    return x.quot.size() < y.quot.size();
  });
  return terms;
}

}  // namespace

CharacterSum lr_coefficients(const GLWeight& mu, const GLWeight& nu, std::size_t rank) {
  require_partition(mu);
  require_partition(nu);
  auto key = std::make_tuple(pad(mu, rank), pad(nu, rank), rank);
  return lr_cache().get_or_compute(key, [&] {
    return compute_lr(std::get<0>(key), std::get<1>(key), rank);
  });
}

CharacterSum tensor_schur(const GLWeight& a, const GLWeight& b, std::size_t rank) {
  if (a.rank() != rank || b.rank() != rank) {
    throw RankMismatch("tensor_schur expects full-length weights of rank " + std::to_string(rank));
  }
  const Int ka = normalizing_shift(a);
  const Int kb = normalizing_shift(b);
  CharacterSum product = lr_coefficients(a.shifted(ka), b.shifted(kb), rank);
  if (ka + kb == 0) return product;
  CharacterSum out(rank);
  for (const auto& [w, m] : product.terms()) out.add(w.shifted(-(ka + kb)), m);
  return out;
}

CharacterSum tensor(const CharacterSum& a, const CharacterSum& b) {
  if (a.rank() != b.rank()) throw RankMismatch("tensor of characters of different ranks");
  CharacterSum out(a.rank());
  for (const auto& [wa, ma] : a.terms()) {
    for (const auto& [wb, mb] : b.terms()) {
      out += tensor_schur(wa, wb, a.rank()).scaled(ma * mb);
    }
  }
  return out;
}

Int schur_dim(const GLWeight& lambda, std::size_t rank) {
  if (lambda.rank() != rank) throw RankMismatch("schur_dim: weight length differs from rank");
  Int num = 1;
  Int den = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      num *= lambda[i] - lambda[j] + Int(j - i);
      den *= Int(j - i);
    }
  }
  return num / den;
}

CharacterSum dual_sum(const CharacterSum& s) {
  CharacterSum out(s.rank());
  for (const auto& [w, m] : s.terms()) out.add(dual_weight(w), m);
  return out;
}

std::vector<LeviTerm> branch_to_levi(const GLWeight& alpha, std::size_t sub_rank,
                                     std::size_t quot_rank) {
  if (alpha.rank() != sub_rank + quot_rank) {
    throw RankMismatch("branch_to_levi: weight rank " + std::to_string(alpha.rank()) +
                       " differs from " + std::to_string(sub_rank) + " + " +
                       std::to_string(quot_rank));
  }
  auto key = std::make_tuple(alpha, sub_rank, quot_rank);
  return levi_cache().get_or_compute(key, [&] { return compute_levi(alpha, sub_rank, quot_rank); });
}

}  // namespace flagtilt
