#include "hookforge/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace hookforge {

std::string to_string(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string_view to_string(HookSide side) {
  return side == HookSide::internal ? "internal" : "external";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) {
      throw precondition_error("partition parts must be positive");
    }
    if (k > 0 && parts_[k] > parts_[k - 1]) {
      throw precondition_error("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\n' ||
                           text.back() == '\r' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) return Partition{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw precondition_error("malformed partition text '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::column_length(int col) const {
  if (col < 0) return 0;
  // parts are decreasing: count rows whose part exceeds col
  auto it = std::partition_point(parts_.begin(), parts_.end(),
                                 [col](int p) { return p > col; });
  return static_cast<int>(it - parts_.begin());
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(largest()));
  for (int col = 0; col < largest(); ++col) out.push_back(column_length(col));
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

HookStats hook_stats(const Partition& lambda, Cell c, HookSide side) {
  if (c.row < 0 || c.col < 0) {
    throw precondition_error("cell " + to_string(c) + " has a negative coordinate");
  }
  const bool inside = lambda.contains(c);
  HookStats h;
  h.side = side;
  if (side == HookSide::internal) {
    if (!inside) {
      throw precondition_error("internal hook requested at " + to_string(c) +
                               " which lies outside (" + lambda.to_string() + ")");
    }
    h.arm = lambda.part(c.row) - 1 - c.col;
    h.leg = lambda.column_length(c.col) - 1 - c.row;
    h.hand = {c.row, c.col + h.arm};
    h.foot = {c.row + h.leg, c.col};
  } else {
    if (inside) {
      throw precondition_error("external hook requested at " + to_string(c) +
                               " which lies inside (" + lambda.to_string() + ")");
    }
    // Outside cells west of c in its row are exactly cols part(row)..col-1,
    // and outside cells north of c are rows column_length(col)..row-1.
    h.arm = c.col - lambda.part(c.row);
    h.leg = c.row - lambda.column_length(c.col);
    h.hand = {c.row, c.col - h.arm};
    h.foot = {c.row - h.leg, c.col};
  }
  h.hook_len = h.arm + h.leg + 1;
  // internal: hand is the east end (max content), foot the south end (min);
  // external: hand is the west end (min content), foot the north end (max).
  h.content_lo = std::min(h.hand.content(), h.foot.content());
  h.content_hi = std::max(h.hand.content(), h.foot.content());
  return h;
}

std::vector<Cell> hook_cells(const HookStats& h, Cell corner) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(h.hook_len));
  const int dir = h.side == HookSide::internal ? 1 : -1;
  for (int k = h.arm; k >= 1; --k) cells.push_back({corner.row, corner.col + dir * k});
  cells.push_back(corner);
  for (int k = 1; k <= h.leg; ++k) cells.push_back({corner.row + dir * k, corner.col});
  return cells;
}

PartitionStream::PartitionStream(int d) {
  if (d < 0) {
    done_ = true;
  } else if (d > 0) {
    current_.push_back(d);
  }
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (current_.empty()) done_ = true;
    return Partition(current_);
  }
  // Reverse-lex successor: find the last part > 1, decrement it, and
  // redistribute the trailing ones plus one greedily with that new bound.
  int ones = 0;
  while (!current_.empty() && current_.back() == 1) {
    current_.pop_back();
    ++ones;
  }
  if (current_.empty()) {
    done_ = true;
    return std::nullopt;
  }
  const int bound = --current_.back();
  int rest = ones + 1;
  while (rest > 0) {
    const int take = std::min(bound, rest);
    current_.push_back(take);
    rest -= take;
  }
  return Partition(current_);
}

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  PartitionStream stream(d);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_size; ++d) {
    auto batch = partitions_of(d);
    out.insert(out.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return out;
}

std::int64_t partition_count(int d) {
  if (d < 0) return 0;
  std::vector<std::int64_t> p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= d; ++n) {
    std::int64_t total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const int g2 = k * (3 * k + 1) / 2;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p[static_cast<std::size_t>(d)];
}

int Subdivision::column_offset(int m) const {
  int s = 0;
  for (int k = 0; k < m && k < K; ++k) s += x[static_cast<std::size_t>(k)];
  return s;
}

int Subdivision::row_offset(int m) const {
  int s = 0;
  for (int k = 0; k < m && k < K; ++k) s += y[static_cast<std::size_t>(k)];
  return s;
}

int Subdivision::column_band(int col) const {
  int edge = 0;
  for (int i = 1; i <= K; ++i) {
    edge += x[static_cast<std::size_t>(i - 1)];
    if (col < edge) return i;
  }
  return K + 1;
}

int Subdivision::row_band(int row) const {
  int edge = 0;
  for (int j = 1; j <= K; ++j) {
    edge += y[static_cast<std::size_t>(j - 1)];
    if (row < edge) return j;
  }
  return K + 1;
}

Subdivision subdivision(const Partition& lambda) {
  if (lambda.empty()) {
    throw precondition_error("the empty partition has no band subdivision");
  }
  Subdivision s;
  const auto parts = lambda.parts();
  // distinct parts, decreasing, with multiplicities
  std::vector<int> distinct;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k == 0 || parts[k] != parts[k - 1]) {
      distinct.push_back(parts[k]);
      s.y.push_back(1);
    } else {
      ++s.y.back();
    }
  }
  s.K = static_cast<int>(distinct.size());
  int previous = 0;
  for (auto it = distinct.rbegin(); it != distinct.rend(); ++it) {
    s.x.push_back(*it - previous);
    previous = *it;
  }
  return s;
}

ThinnessWitness check_thin(const Partition& lambda) {
  if (lambda.empty()) return {};
  const Subdivision s = subdivision(lambda);
  auto check = [&](const std::vector<int>& v, char name) -> std::string {
    int prefix = 0;
    for (int n = 1; n < s.K; ++n) {
      prefix += v[static_cast<std::size_t>(n - 1)];
      const int next = v[static_cast<std::size_t>(n)];
      if (prefix > next) {
        std::ostringstream msg;
        msg << name << "_1 + ... + " << name << "_" << n << " = " << prefix << " > "
            << name << "_" << (n + 1) << " = " << next;
        return msg.str();
      }
    }
    return {};
  };
  if (auto fx = check(s.x, 'x'); !fx.empty()) return {false, fx};
  if (auto fy = check(s.y, 'y'); !fy.empty()) return {false, fy};
  return {};
}

}  // namespace hookforge
