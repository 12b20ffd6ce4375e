#include "hullx/geometry.hpp"

#include <algorithm>

#include "hullx/errors.hpp"
#include "hullx/linalg.hpp"

namespace hullx {

Configuration::Configuration(std::size_t dim, std::vector<RatVector> points)
    : dim_(dim), points_(std::move(points)) {
  if (dim_ == 0) throw InvalidArgument("configuration dimension must be at least 1");
  if (points_.empty()) throw InvalidArgument("configuration needs at least one point");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != dim_) {
      throw InvalidArgument("point " + std::to_string(i + 1) + " has " +
                            std::to_string(points_[i].size()) + " coordinates, expected " +
                            std::to_string(dim_));
    }
    for (auto& c : points_[i]) c.canonicalize();
  }
}

IndexSet::IndexSet(std::initializer_list<std::size_t> members)
    : IndexSet(std::vector<std::size_t>(members)) {}

IndexSet::IndexSet(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

IndexSet IndexSet::all(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return IndexSet(std::move(m));
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) m.push_back(i);
  }
  return IndexSet(std::move(m));
}

IndexSet IndexSet::from_labels(std::span<const std::size_t> one_based) {
  std::vector<std::size_t> m;
  for (auto label : one_based) {
    if (label == 0) throw InvalidArgument("labels are 1-based; got 0");
    m.push_back(label - 1);
  }
  return IndexSet(std::move(m));
}

bool IndexSet::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::uint64_t IndexSet::mask() const {
  std::uint64_t m = 0;
  for (auto i : members_) {
    if (i >= 64) throw LimitError("index set mask requires labels below 64");
    m |= std::uint64_t{1} << i;
  }
  return m;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i] + 1);
  }
  return out + "}";
}

std::vector<RatVector> select(const Configuration& cfg, const IndexSet& set) {
  std::vector<RatVector> out;
  out.reserve(set.size());
  for (auto i : set) out.push_back(cfg.point(i));
  return out;
}

void check_index_set(const Configuration& cfg, const IndexSet& set, bool allow_empty) {
  if (set.empty() && !allow_empty) throw InvalidArgument("index set must be nonempty");
  if (!set.empty() && set.members().back() >= cfg.size()) {
    throw InvalidArgument("label " + std::to_string(set.members().back() + 1) +
                          " exceeds configuration size " + std::to_string(cfg.size()));
  }
}

AffineFlat::AffineFlat(RatVector anchor, std::vector<RatVector> directions)
    : anchor_(std::move(anchor)), directions_(std::move(directions)) {
  if (anchor_.empty()) throw InvalidArgument("flat anchor must have at least one coordinate");
  for (const auto& u : directions_) {
    if (u.size() != anchor_.size()) throw InvalidArgument("flat direction length mismatch");
  }
  for (auto& c : anchor_) c.canonicalize();
  for (auto& u : directions_)
    for (auto& c : u) c.canonicalize();
  if (rank(RatMatrix::from_rows(directions_, anchor_.size())) != directions_.size())
    throw InvalidArgument("flat directions are linearly dependent");
}

AffineFlat AffineFlat::point(RatVector x) { return AffineFlat(std::move(x), {}); }

AffineFlat AffineFlat::whole_space(std::size_t d) {
  std::vector<RatVector> dirs(d, RatVector(d));
  for (std::size_t i = 0; i < d; ++i) dirs[i][i] = 1;
  return AffineFlat(RatVector(d), std::move(dirs));
}

AffineFlat AffineFlat::through(std::span<const RatVector> points) {
  const AffineChart chart(points);
  std::vector<RatVector> dirs;
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    const auto row = chart.basis().row(i);
    dirs.emplace_back(row.begin(), row.end());
  }
  return AffineFlat(chart.origin(), std::move(dirs));
}

std::string AffineFlat::to_string() const {
  auto join = [](const RatVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += hullx::to_string(v[i]);
    }
    return s;
  };
  std::string out = join(anchor_);
  for (const auto& u : directions_) out += ";" + join(u);
  return out;
}

AffineFlat AffineFlat::parse(std::string_view text) {
  std::vector<RatVector> parts;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    parts.push_back(parse_vector(text.substr(start, semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  RatVector anchor = std::move(parts.front());
  parts.erase(parts.begin());
  return AffineFlat(std::move(anchor), std::move(parts));
}

}  // namespace hullx
