#include "zigzag/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zigzag {

namespace detail {

struct PermAccess {
  static Perm make(std::vector<int> values) {
    Perm p;
    p.values_ = std::move(values);
    return p;
  }
};

}  // namespace detail

Perm::Perm(std::vector<int> values) : values_(std::move(values)) {
  const auto n = static_cast<int>(values_.size());
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." +
                                  std::to_string(n));
    }
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return detail::PermAccess::make(std::move(v));
}

std::string Perm::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ' ';
    os << values_[i];
  }
  return os.str();
}

std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::S_odd: return "S_odd";
    case ClassTag::C_even: return "C_even";
    case ClassTag::D_even: return "D_even";
    case ClassTag::DownUp_odd: return "DownUp_odd";
    case ClassTag::Ascending_any: return "Ascending_any";
    case ClassTag::Other: return "Other";
  }
  return "?";
}

std::string_view to_string(StatVariant v) {
  switch (v) {
    case StatVariant::interior_peaks: return "interior_peaks";
    case StatVariant::interior_valleys: return "interior_valleys";
    case StatVariant::peaks_with_final: return "peaks_with_final";
    case StatVariant::valleys_with_initial: return "valleys_with_initial";
  }
  return "?";
}

std::optional<ClassTag> parse_class_tag(std::string_view name) {
  for (ClassTag t : {ClassTag::S_odd, ClassTag::C_even, ClassTag::D_even,
                     ClassTag::DownUp_odd, ClassTag::Ascending_any,
                     ClassTag::Other}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::optional<StatVariant> parse_stat_variant(std::string_view name) {
  for (StatVariant v : kAllStatVariants) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

namespace {

// Comparison i joins positions i and i+1 (zero-based).
bool follows_pattern(std::span<const int> w, bool first_up) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    bool up = (i % 2 == 0) == first_up;
    if (up ? !(w[i] < w[i + 1]) : !(w[i] > w[i + 1])) return false;
  }
  return true;
}

}  // namespace

bool is_up_down(std::span<const int> word) {
  return follows_pattern(word, true);
}

bool is_down_up(std::span<const int> word) {
  return follows_pattern(word, false);
}

bool is_alternating(std::span<const int> word) {
  return is_up_down(word) || is_down_up(word);
}

ClassTag classify(const Perm& p) {
  const std::size_t n = p.size();
  const bool odd = n % 2 == 1;
  if (is_up_down(p.word())) return odd ? ClassTag::S_odd : ClassTag::C_even;
  if (is_down_up(p.word())) return odd ? ClassTag::DownUp_odd : ClassTag::D_even;
  return ClassTag::Other;
}

bool is_member(const Perm& p, ClassTag tag) {
  const bool odd = p.size() % 2 == 1;
  switch (tag) {
    case ClassTag::S_odd:
      return odd && is_up_down(p.word());
    case ClassTag::C_even:
      return !odd && is_up_down(p.word());
    case ClassTag::D_even:
      return !odd && is_down_up(p.word());
    case ClassTag::DownUp_odd:
      return odd && p.size() >= 3 && is_down_up(p.word());
    case ClassTag::Ascending_any:
      return is_up_down(p.word());
    case ClassTag::Other:
      return classify(p) == ClassTag::Other;
  }
  return false;
}

unsigned stat(std::span<const int> w, StatVariant v) {
  const std::size_t n = w.size();
  unsigned count = 0;
  const bool want_peaks = v == StatVariant::interior_peaks ||
                          v == StatVariant::peaks_with_final;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (want_peaks ? (w[i - 1] < w[i] && w[i] > w[i + 1])
                   : (w[i - 1] > w[i] && w[i] < w[i + 1])) {
      ++count;
    }
  }
  if (n >= 2) {
    if (v == StatVariant::peaks_with_final && w[n - 2] < w[n - 1]) ++count;
    if (v == StatVariant::valleys_with_initial && w[0] < w[1]) ++count;
  }
  return count;
}

namespace {

void check_cap(std::size_t n, const EnumerationCaps& caps) {
  const std::size_t cap = std::min(caps.max_size, kEnumerationHardLimit);
  if (n > cap) {
    throw std::out_of_range("enumeration size " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  }
}

// Backtracking over prefixes that respect the zigzag pattern; values are
// tried in increasing order so members come out lexicographically.
class ZigzagWalker {
 public:
  ZigzagWalker(std::size_t n, bool first_up,
               const std::function<void(const Perm&)>& visit)
      : n_(n), first_up_(first_up), visit_(visit), used_(n + 1, false) {
    word_.reserve(n);
  }

  void run() { extend(); }

 private:
  void extend() {
    const std::size_t pos = word_.size();
    if (pos == n_) {
      visit_(detail::PermAccess::make(word_));
      return;
    }
    for (int v = 1; v <= static_cast<int>(n_); ++v) {
      if (used_[v]) continue;
      if (pos > 0) {
        const bool up = ((pos - 1) % 2 == 0) == first_up_;
        if (up ? !(word_.back() < v) : !(word_.back() > v)) {
          if (!up) break;  // descent: larger values cannot work either
          continue;
        }
      }
      used_[v] = true;
      word_.push_back(v);
      extend();
      word_.pop_back();
      used_[v] = false;
    }
  }

  std::size_t n_;
  bool first_up_;
  const std::function<void(const Perm&)>& visit_;
  std::vector<bool> used_;
  std::vector<int> word_;
};

}  // namespace

void for_each_in_class(ClassTag tag, std::size_t n,
                       const std::function<void(const Perm&)>& visit,
                       const EnumerationCaps& caps) {
  check_cap(n, caps);
  const bool odd = n % 2 == 1;
  switch (tag) {
    case ClassTag::S_odd:
      if (odd) ZigzagWalker(n, true, visit).run();
      return;
    case ClassTag::C_even:
      if (!odd) ZigzagWalker(n, true, visit).run();
      return;
    case ClassTag::D_even:
      if (!odd) ZigzagWalker(n, false, visit).run();
      return;
    case ClassTag::DownUp_odd:
      if (odd && n >= 3) ZigzagWalker(n, false, visit).run();
      return;
    case ClassTag::Ascending_any:
      ZigzagWalker(n, true, visit).run();
      return;
    case ClassTag::Other: {
      std::vector<int> v(n);
      std::iota(v.begin(), v.end(), 1);
      do {
        Perm p = detail::PermAccess::make(v);
        if (classify(p) == ClassTag::Other) visit(p);
      } while (std::next_permutation(v.begin(), v.end()));
      return;
    }
  }
}

std::vector<Perm> enumerate_class(ClassTag tag, std::size_t n,
                                  const EnumerationCaps& caps) {
  std::vector<Perm> out;
  for_each_in_class(tag, n, [&](const Perm& p) { out.push_back(p); }, caps);
  return out;
}

std::uint64_t count_class(ClassTag tag, std::size_t n,
                          const EnumerationCaps& caps) {
  std::uint64_t count = 0;
  for_each_in_class(tag, n, [&](const Perm&) { ++count; }, caps);
  return count;
}

WPoly class_weight_poly(ClassTag tag, std::size_t n, StatVariant v,
                        const EnumerationCaps& caps) {
  std::vector<std::uint64_t> hist;
  for_each_in_class(
      tag, n,
      [&](const Perm& p) {
        const unsigned s = stat(p, v);
        if (hist.size() <= s) hist.resize(s + 1, 0);
        ++hist[s];
      },
      caps);
  std::vector<Rat> coeffs;
  coeffs.reserve(hist.size());
  for (auto c : hist) coeffs.emplace_back(BigInt(std::to_string(c)));
  return WPoly(std::move(coeffs));
}

Perm standardize(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && word[order[rank]] == word[order[rank - 1]]) {
      throw std::invalid_argument("standardize: duplicate entry " +
                                  std::to_string(word[order[rank]]));
    }
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return detail::PermAccess::make(std::move(out));
}

}  // namespace zigzag
