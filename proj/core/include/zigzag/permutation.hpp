#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/wpoly.hpp"

namespace zigzag {

namespace detail {
struct PermAccess;
}

// A permutation of {1..n}; n may be zero.
class Perm {
 public:
  Perm() = default;
  // Throws std::invalid_argument unless values is a bijection onto {1..n}.
  explicit Perm(std::vector<int> values);
  Perm(std::initializer_list<int> values) : Perm(std::vector<int>(values)) {}

  static Perm identity(std::size_t n);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<int>& values() const { return values_; }
  std::span<const int> word() const { return values_; }
  // Zero-based.
  int operator[](std::size_t i) const { return values_[i]; }

  // Space separated, e.g. "2 5 1 7 3 6 4"; the empty permutation is "".
  std::string to_string() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  friend struct detail::PermAccess;

  std::vector<int> values_;
};

// Alternating classes. C_even and D_even are read from the displayed
// patterns: even size, first comparison an ascent (C) or descent (D).
// Ascending_any is every up-down permutation regardless of parity; it
// overlaps S_odd and C_even, so classify() never returns it.
enum class ClassTag {
  S_odd,
  C_even,
  D_even,
  DownUp_odd,
  Ascending_any,
  Other,
};

enum class StatVariant {
  interior_peaks,
  interior_valleys,
  peaks_with_final,
  valleys_with_initial,
};

inline constexpr std::array<StatVariant, 4> kAllStatVariants = {
    StatVariant::interior_peaks, StatVariant::interior_valleys,
    StatVariant::peaks_with_final, StatVariant::valleys_with_initial};

std::string_view to_string(ClassTag tag);
std::string_view to_string(StatVariant v);
std::optional<ClassTag> parse_class_tag(std::string_view name);
std::optional<StatVariant> parse_stat_variant(std::string_view name);

// w_1 < w_2 > w_3 < ... (vacuous for length <= 1).
bool is_up_down(std::span<const int> word);
// w_1 > w_2 < w_3 > ... (vacuous for length <= 1).
bool is_down_up(std::span<const int> word);
bool is_alternating(std::span<const int> word);

// The empty permutation classifies as C_even; size 1 as S_odd.
ClassTag classify(const Perm& p);
// Membership with the size-0 conventions: the empty permutation belongs to
// C_even, D_even and Ascending_any.
bool is_member(const Perm& p, ClassTag tag);

// Statistic on any word of distinct integers; only relative order matters.
unsigned stat(std::span<const int> word, StatVariant v);
inline unsigned stat(const Perm& p, StatVariant v) { return stat(p.word(), v); }

struct EnumerationCaps {
  std::size_t max_size = 12;
};

// Largest size any caller may configure.
inline constexpr std::size_t kEnumerationHardLimit = 14;

// Visits each member of the class with the given size exactly once, in
// lexicographic order. Throws std::out_of_range when n exceeds the cap.
void for_each_in_class(ClassTag tag, std::size_t n,
                       const std::function<void(const Perm&)>& visit,
                       const EnumerationCaps& caps = {});

std::vector<Perm> enumerate_class(ClassTag tag, std::size_t n,
                                  const EnumerationCaps& caps = {});

std::uint64_t count_class(ClassTag tag, std::size_t n,
                          const EnumerationCaps& caps = {});

// sum over the class of w^stat(p, v).
WPoly class_weight_poly(ClassTag tag, std::size_t n, StatVariant v,
                        const EnumerationCaps& caps = {});

// Order-isomorphic permutation of {1..len}. Throws on duplicate entries.
Perm standardize(std::span<const int> word);

}  // namespace zigzag
