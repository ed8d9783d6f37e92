#include "cyclotope/tope.hpp"

#include <algorithm>
#include <charconv>

namespace cyclotope {

namespace {

void require_same_dimension(int a, int b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimensions " + std::to_string(a) + " and " + std::to_string(b) + " differ");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Tope::Tope(SignVector signs) : signs_(std::move(signs)) {
  require_dimension(t());
  for (Eigen::Index i = 0; i < signs_.size(); ++i) {
    if (signs_[i] != 1 && signs_[i] != -1) {
      throw Error(ErrorKind::InvalidArgument,
                  "tope entry " + std::to_string(i + 1) + " is not +1 or -1");
    }
  }
}

Tope Tope::positive(int t) {
  require_dimension(t);
  return Tope(SignVector::Ones(t));
}

Tope Tope::negative(int t) {
  require_dimension(t);
  return Tope(SignVector::Constant(t, std::int8_t{-1}));
}

Tope Tope::from_mask(int t, std::uint64_t mask) {
  require_dimension(t);
  if (t > 64 || (t < 64 && (mask >> t) != 0)) {
    throw Error(ErrorKind::InvalidArgument, "mask does not fit dimension " + std::to_string(t));
  }
  SignVector s(t);
  for (int i = 0; i < t; ++i) s[i] = ((mask >> i) & 1U) ? std::int8_t{-1} : std::int8_t{1};
  return Tope(std::move(s));
}

Tope Tope::parse(std::string_view text) {
  text = trim(text);
  SignVector s(static_cast<Eigen::Index>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '+': s[static_cast<Eigen::Index>(i)] = 1; break;
      case '-': s[static_cast<Eigen::Index>(i)] = -1; break;
      default:
        throw Error(ErrorKind::ParseError,
                    "tope string may contain only '+' and '-': \"" + std::string(text) + "\"");
    }
  }
  return Tope(std::move(s));
}

int Tope::operator()(int e) const {
  if (e < 1 || e > t()) {
    throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(e) + " outside E_t");
  }
  return signs_[e - 1];
}

std::uint64_t Tope::mask() const {
  if (t() > 64) throw Error(ErrorKind::InvalidArgument, "mask form needs t <= 64");
  std::uint64_t m = 0;
  for (int i = 0; i < t(); ++i) {
    if (signs_[i] < 0) m |= std::uint64_t{1} << i;
  }
  return m;
}

std::string Tope::to_string() const {
  std::string out(static_cast<std::size_t>(t()), '+');
  for (int i = 0; i < t(); ++i) {
    if (signs_[i] < 0) out[static_cast<std::size_t>(i)] = '-';
  }
  return out;
}

Tope Tope::operator-() const { return Tope(SignVector(-signs_)); }

GroundSubset::GroundSubset(int t, std::vector<int> members) : t_(t), members_(std::move(members)) {
  require_dimension(t);
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorKind::InvalidArgument, "subset has duplicate members");
  }
  if (!members_.empty() && (members_.front() < 1 || members_.back() > t)) {
    throw Error(ErrorKind::IndexOutOfRange, "subset member outside [1," + std::to_string(t) + "]");
  }
}

GroundSubset GroundSubset::empty(int t) { return GroundSubset(t, {}); }

GroundSubset GroundSubset::full(int t) {
  require_dimension(t);
  std::vector<int> all(static_cast<std::size_t>(t));
  for (int e = 1; e <= t; ++e) all[static_cast<std::size_t>(e - 1)] = e;
  return GroundSubset(t, std::move(all));
}

GroundSubset GroundSubset::from_mask(int t, std::uint64_t mask) {
  require_dimension(t);
  if (t > 64 || (t < 64 && (mask >> t) != 0)) {
    throw Error(ErrorKind::InvalidArgument, "mask does not fit dimension " + std::to_string(t));
  }
  std::vector<int> members;
  for (int i = 0; i < t; ++i) {
    if ((mask >> i) & 1U) members.push_back(i + 1);
  }
  return GroundSubset(t, std::move(members));
}

GroundSubset GroundSubset::parse(int t, std::string_view text) {
  text = trim(text);
  if (text == "none") return empty(t);
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty subset text; use \"none\"");
  std::vector<int> members;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::ParseError, "bad subset element \"" + std::string(token) + "\"");
    }
    members.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw Error(ErrorKind::ParseError, "trailing comma in subset");
  }
  return GroundSubset(t, std::move(members));
}

bool GroundSubset::contains(int e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

int GroundSubset::boundary_count() const {
  return static_cast<int>(contains(1)) + static_cast<int>(contains(t_));
}

GroundSubset GroundSubset::complement() const {
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(t_) - members_.size());
  auto it = members_.begin();
  for (int e = 1; e <= t_; ++e) {
    if (it != members_.end() && *it == e) {
      ++it;
    } else {
      rest.push_back(e);
    }
  }
  return GroundSubset(t_, std::move(rest));
}

std::uint64_t GroundSubset::mask() const {
  if (t_ > 64) throw Error(ErrorKind::InvalidArgument, "mask form needs t <= 64");
  std::uint64_t m = 0;
  for (int e : members_) m |= std::uint64_t{1} << (e - 1);
  return m;
}

std::string GroundSubset::to_string() const {
  if (members_.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members_[i]);
  }
  return out;
}

Tope reorient(const Tope& tope, const GroundSubset& subset) {
  require_same_dimension(tope.t(), subset.t());
  SignVector s = tope.signs();
  for (int e : subset.members()) s[e - 1] = static_cast<std::int8_t>(-s[e - 1]);
  return Tope(std::move(s));
}

GroundSubset negative_part(const Tope& tope) {
  std::vector<int> members;
  for (int e = 1; e <= tope.t(); ++e) {
    if (tope.signs()[e - 1] < 0) members.push_back(e);
  }
  return GroundSubset(tope.t(), std::move(members));
}

GroundSubset separation_set(const Tope& first, const Tope& second) {
  require_same_dimension(first.t(), second.t());
  std::vector<int> members;
  for (int e = 1; e <= first.t(); ++e) {
    if (first.signs()[e - 1] != second.signs()[e - 1]) members.push_back(e);
  }
  return GroundSubset(first.t(), std::move(members));
}

IntervalPartition interval_partition(const GroundSubset& subset) {
  if (subset.is_empty()) {
    throw Error(ErrorKind::EmptySet, "interval partition needs a nonempty subset");
  }
  IntervalPartition out;
  const auto members = subset.members();
  Interval run{members.front(), members.front()};
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i] == run.last + 1) {
      run.last = members[i];
    } else {
      out.intervals.push_back(run);
      run = {members[i], members[i]};
    }
  }
  out.intervals.push_back(run);
  return out;
}

std::int64_t inner(const Tope& a, const Tope& b) {
  require_same_dimension(a.t(), b.t());
  return a.signs().cast<std::int64_t>().dot(b.signs().cast<std::int64_t>());
}

MeetJoin negpart_meet_join_cards(const Tope& first, const Tope& second) {
  require_same_dimension(first.t(), second.t());
  const std::int64_t t = first.t();
  const std::int64_t cross = inner(first, second);
  const std::int64_t against_positive =
      first.signs().cast<std::int64_t>().sum() + second.signs().cast<std::int64_t>().sum();
  const std::int64_t meet4 = t + cross - against_positive;
  const std::int64_t join4 = 3 * t - cross - against_positive;
  if (meet4 % 4 != 0 || join4 % 4 != 0) {
    throw InternalError("negative-part cardinality formula is not integral");
  }
  return {meet4 / 4, join4 / 4};
}

}  // namespace cyclotope
