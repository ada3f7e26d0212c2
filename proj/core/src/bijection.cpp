#include "zigzag/bijection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace zigzag {

namespace {

std::string class_label(const Perm& p) {
  return std::string(to_string(classify(p))) + "(" + std::to_string(p.size()) +
         ")";
}

std::string join_labels(const std::set<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ',';
    out += l;
  }
  return out;
}

}  // namespace

RawBlocks raw_blocks(const Perm& sigma) {
  const auto& v = sigma.values();
  auto it = std::max_element(v.begin(), v.end());
  return {std::vector<int>(v.begin(), it), std::vector<int>(it + 1, v.end())};
}

SplitResult split_at_max(const Perm& sigma) {
  if (sigma.size() < 3 || !is_member(sigma, ClassTag::S_odd)) {
    throw std::invalid_argument("split_at_max: '" + sigma.to_string() +
                                "' is not an odd up-down permutation of size >= 3");
  }
  RawBlocks raw = raw_blocks(sigma);
  SplitResult out;
  out.left_values = raw.left;
  std::sort(out.left_values.begin(), out.left_values.end());
  out.left = standardize(raw.left);
  out.right = standardize(raw.right);
  out.max_position = raw.left.size() + 1;
  return out;
}

Perm merge(const SplitResult& s, std::size_t total_size) {
  const std::size_t nl = s.left.size();
  const std::size_t nr = s.right.size();
  if (nl + nr + 1 != total_size) {
    throw std::invalid_argument("merge: block sizes do not add up to " +
                                std::to_string(total_size));
  }
  if (s.max_position != nl + 1) {
    throw std::invalid_argument("merge: max_position inconsistent with left block");
  }
  if (s.left_values.size() != nl) {
    throw std::invalid_argument("merge: left value set has wrong size");
  }
  const int max_value = static_cast<int>(total_size);
  std::vector<bool> in_left(total_size + 1, false);
  for (std::size_t i = 0; i < nl; ++i) {
    const int v = s.left_values[i];
    if (v < 1 || v >= max_value || in_left[v] ||
        (i > 0 && s.left_values[i - 1] >= v)) {
      throw std::invalid_argument(
          "merge: left values must be strictly increasing within 1..n-1");
    }
    in_left[v] = true;
  }
  if (!is_member(s.left, ClassTag::S_odd) ||
      !is_member(s.right, ClassTag::S_odd)) {
    throw std::invalid_argument("merge: blocks must be odd up-down permutations");
  }
  std::vector<int> right_values;
  right_values.reserve(nr);
  for (int v = 1; v < max_value; ++v) {
    if (!in_left[v]) right_values.push_back(v);
  }
  std::vector<int> out;
  out.reserve(total_size);
  for (int x : s.left.values()) out.push_back(s.left_values[x - 1]);
  out.push_back(max_value);
  for (int x : s.right.values()) out.push_back(right_values[x - 1]);
  return Perm(std::move(out));
}

unsigned Snake::elliptic_count() const {
  return static_cast<unsigned>(
      std::count(elliptic_flags.begin(), elliptic_flags.end(), true));
}

WPoly Snake::weight() const {
  return WPoly::monomial(Rat(1), elliptic_count());
}

Snake snake_encode(const Perm& p) {
  if (!is_alternating(p.word())) {
    throw std::invalid_argument("snake_encode: '" + p.to_string() +
                                "' is not alternating");
  }
  Snake s;
  s.levels = p.values();
  s.elliptic_flags.assign(p.size(), false);
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    s.elliptic_flags[i] = p[i - 1] < p[i] && p[i] > p[i + 1];
  }
  return s;
}

std::vector<ClaimVerdict> verify_split_properties(std::size_t max_size) {
  if (max_size > kSplitVerifyLimit) {
    throw std::out_of_range("verify_split_properties: size cap is " +
                            std::to_string(kSplitVerifyLimit));
  }
  VerdictBuilder rt("BIJ-RT",
                    "merge(split_at_max(s)) = s and split_at_max is injective on S_odd");
  VerdictBuilder peak("BIJ-PEAK", "nu(s) = nu(L) + nu(R) + 1 (interior peaks)");
  VerdictBuilder parity(
      "BIJ-PARITY",
      "removing the maximum at position 2j of s in S_{2n+1} and deleting the "
      "last entry of L gives alpha in C_{2j-2}, beta in D_{2(n-j)}");
  for (auto* b : {&rt, &peak, &parity}) {
    b->param("max_size", std::to_string(max_size));
  }
  parity.note(
      "Blocks are measured as they come out of the split; the deleted-entry "
      "form is also measured.");

  const EnumerationCaps caps{kSplitVerifyLimit};
  for (std::size_t size = 3; size <= max_size; size += 2) {
    const std::size_t n = (size - 1) / 2;
    std::set<SplitResult> seen;
    std::size_t count = 0;
    struct Group {
      std::size_t members = 0;
      std::set<std::string> alpha, beta, raw_left;
      bool ok = true;
      std::string example;
    };
    std::map<std::size_t, Group> groups;

    for_each_in_class(
        ClassTag::S_odd, size,
        [&](const Perm& sigma) {
          ++count;
          SplitResult s = split_at_max(sigma);
          Perm back = merge(s, size);
          rt.check(sigma.to_string(), back == sigma,
                   {{"merged", back.to_string()}});
          if (!seen.insert(s).second) {
            rt.check(sigma.to_string(), false, {{"error", "split collision"}});
          }

          RawBlocks raw = raw_blocks(sigma);
          const unsigned lhs = stat(sigma, StatVariant::interior_peaks);
          const unsigned nl = stat(raw.left, StatVariant::interior_peaks);
          const unsigned nr = stat(raw.right, StatVariant::interior_peaks);
          peak.check(sigma.to_string(), lhs == nl + nr + 1,
                     {{"nu", std::to_string(lhs)},
                      {"nu_L", std::to_string(nl)},
                      {"nu_R", std::to_string(nr)}});

          const std::size_t j = s.max_position / 2;
          std::vector<int> trimmed(raw.left.begin(), raw.left.end() - 1);
          Perm alpha = standardize(trimmed);
          const Perm& beta = s.right;
          Group& g = groups[j];
          ++g.members;
          g.alpha.insert(class_label(alpha));
          g.beta.insert(class_label(beta));
          g.raw_left.insert(class_label(s.left));
          const bool alpha_ok =
              alpha.size() == 2 * j - 2 && is_member(alpha, ClassTag::C_even);
          const bool beta_ok =
              beta.size() == 2 * (n - j) && is_member(beta, ClassTag::D_even);
          const bool sizes_ok = alpha.size() + beta.size() + 1 == size;
          if (!(alpha_ok && beta_ok && sizes_ok)) {
            if (g.ok) g.example = sigma.to_string();
            g.ok = false;
          }
        },
        caps);

    Fields counts{{"size", std::to_string(size)},
                  {"permutations", std::to_string(count)},
                  {"distinct_splits", std::to_string(seen.size())}};
    rt.measure("size=" + std::to_string(size), counts);
    peak.measure("size=" + std::to_string(size),
                 {{"permutations", std::to_string(count)}});
    for (const auto& [j, g] : groups) {
      Fields f{{"claimed_alpha", "C_even(" + std::to_string(2 * j - 2) + ")"},
               {"measured_alpha_deleted_last", join_labels(g.alpha)},
               {"measured_left_block", join_labels(g.raw_left)},
               {"claimed_beta", "D_even(" + std::to_string(2 * (n - j)) + ")"},
               {"measured_beta", join_labels(g.beta)},
               {"permutations", std::to_string(g.members)}};
      if (!g.ok) f.emplace_back("example", g.example);
      parity.check("size=" + std::to_string(size) + ",j=" + std::to_string(j),
                   g.ok, std::move(f));
    }
  }

  std::vector<ClaimVerdict> out;
  out.push_back(std::move(rt).finish());
  out.push_back(std::move(peak).finish());
  out.push_back(std::move(parity).finish());
  return out;
}

}  // namespace zigzag
