#include "negn/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace negn {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0)
      throw std::invalid_argument("partition entries must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("partition must be weakly decreasing");
  }
}

int YoungDiagram::col(int c) const noexcept {
  if (c < 1) return 0;
  // rows are sorted descending, so the rows reaching column c form a prefix
  auto it = std::partition_point(rows_.begin(), rows_.end(),
                                 [c](int len) { return len >= c; });
  return static_cast<int>(it - rows_.begin());
}

YoungDiagram transpose(const YoungDiagram& y) {
  std::vector<int> cols(static_cast<std::size_t>(y.num_cols()));
  for (int c = 1; c <= y.num_cols(); ++c) cols[c - 1] = y.col(c);
  return YoungDiagram(std::move(cols));
}

int area(const YoungDiagram& y) noexcept {
  return std::accumulate(y.rows().begin(), y.rows().end(), 0);
}

BoxTable hook_lengths(const YoungDiagram& y) {
  BoxTable table(y.rows().size());
  for (int r = 1; r <= y.num_rows(); ++r) {
    auto& out = table[r - 1];
    out.reserve(y.row(r));
    for (int c = 1; c <= y.row(r); ++c) {
      int arm = y.row(r) - c;
      int leg = y.col(c) - r;
      out.push_back(arm + leg + 1);
    }
  }
  return table;
}

BoxTable contents(const YoungDiagram& y) {
  BoxTable table(y.rows().size());
  for (int r = 1; r <= y.num_rows(); ++r) {
    auto& out = table[r - 1];
    out.reserve(y.row(r));
    for (int c = 1; c <= y.row(r); ++c) out.push_back(c - r);
  }
  return table;
}

namespace {

std::vector<int> run_lengths(const std::vector<int>& seq) {
  std::vector<int> out;
  for (std::size_t i = 0; i < seq.size();) {
    std::size_t j = i;
    while (j < seq.size() && seq[j] == seq[i]) ++j;
    out.push_back(static_cast<int>(j - i));
    i = j;
  }
  return out;
}

std::vector<int> prefix_sums(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  std::partial_sum(v.begin(), v.end(), out.begin());
  return out;
}

}  // namespace

RunDecomposition RunDecomposition::from_multiplicities(std::vector<int> a,
                                                       std::vector<int> b) {
  RunDecomposition r;
  r.A = prefix_sums(a);
  r.B = prefix_sums(b);
  r.a = std::move(a);
  r.b = std::move(b);
  return r;
}

RunDecomposition runs(const YoungDiagram& y) {
  if (y.empty())
    throw std::invalid_argument("run decomposition of the empty diagram");
  return RunDecomposition::from_multiplicities(run_lengths(y.rows()),
                                               run_lengths(transpose(y).rows()));
}

YoungDiagram from_runs(const RunDecomposition& r) {
  const int k = r.k();
  if (k < 1 || static_cast<int>(r.b.size()) != k)
    throw std::invalid_argument("row and column run counts differ");
  auto positive = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x > 0; });
  };
  if (!positive(r.a) || !positive(r.b))
    throw std::invalid_argument("run multiplicities must be positive");
  if (r.A != prefix_sums(r.a) || r.B != prefix_sums(r.b))
    throw std::invalid_argument("prefix sums do not match multiplicities");

  // Row group g (top-down) spans all column groups up to k+1-g.
  std::vector<int> rows;
  for (int g = 1; g <= k; ++g)
    rows.insert(rows.end(), r.a[g - 1], r.B[k - g]);
  return YoungDiagram(std::move(rows));
}

YoungDiagram parse_partition(std::string_view text) {
  auto is_space = [](char ch) { return ch == ' ' || ch == '\t'; };
  auto trim = [&](std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<int> rows;
  if (text.empty()) return YoungDiagram{};
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} ||
        ptr != token.data() + token.size())
      throw std::invalid_argument("malformed partition entry '" +
                                  std::string(token) + "'");
    rows.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return YoungDiagram(std::move(rows));
}

std::string to_string(const YoungDiagram& y) {
  std::string out;
  for (int len : y.rows()) {
    if (!out.empty()) out += ',';
    out += std::to_string(len);
  }
  return out;
}

namespace {

void extend_partitions(int remaining, int max_part, std::vector<int>& prefix,
                       std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    prefix.push_back(part);
    extend_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<YoungDiagram> out;
  std::vector<int> prefix;
  extend_partitions(n, n, prefix, out);
  return out;
}

std::vector<YoungDiagram> partitions_up_to(int max_area) {
  std::vector<YoungDiagram> out;
  for (int n = 0; n <= max_area; ++n) {
    auto part = partitions_of(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace negn
