#include "hdm/ncube.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

#include "hdm/error.hpp"

namespace hdm {

namespace {

constexpr std::size_t kMaxEntries = std::size_t{1} << 31;

std::size_t pairs_per_axis(std::size_t v) { return v * (v - 1) / 2; }

// Position of (a, b), a < b, in the lexicographic list of such pairs.
std::size_t pair_rank(std::size_t v, std::size_t a, std::size_t b) { return a * v - a * (a + 1) / 2 + (b - a - 1); }

VerifyReport failure(std::size_t axis, std::size_t a, std::size_t b, std::int64_t dev, std::uint64_t checked) {
  VerifyReport r;
  r.passed = false;
  r.axis = axis;
  r.pair = std::make_pair(a, b);
  r.deviation = dev;
  r.checked_pairs = checked;
  return r;
}

}  // namespace

std::optional<std::size_t> checked_volume(std::size_t n, std::size_t v) {
  std::size_t volume = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (v != 0 && volume > kMaxEntries / v) return std::nullopt;
    volume *= v;
  }
  return volume;
}

SignCube::SignCube(std::size_t n, std::size_t v, std::vector<Sign> entries)
    : n_(n), v_(v), strides_(n), data_(std::move(entries)) {
  if (n == 0 || v == 0) throw ShapeMismatch("dimension and order must be positive");
  const auto volume = checked_volume(n, v);
  if (!volume) throw ShapeMismatch("v^n too large");
  if (data_.size() != *volume) {
    throw ShapeMismatch("expected " + std::to_string(*volume) + " entries, got " + std::to_string(data_.size()));
  }
  std::size_t s = 1;
  for (std::size_t j = n; j-- > 0;) {
    strides_[j] = s;
    s *= v;
  }
}

SignCube SignCube::from_ints(std::size_t n, std::size_t v, std::span<const int> entries) {
  std::vector<Sign> signs;
  signs.reserve(entries.size());
  for (int e : entries) {
    if (e != 1 && e != -1) throw ShapeMismatch("entry " + std::to_string(e) + " is not +1 or -1");
    signs.push_back(e > 0 ? kPlus : kMinus);
  }
  return SignCube(n, v, std::move(signs));
}

SignCube SignCube::filled(std::size_t n, std::size_t v, Sign value) {
  const auto volume = checked_volume(n, v);
  if (!volume) throw ShapeMismatch("v^n too large");
  return SignCube(n, v, std::vector<Sign>(*volume, value));
}

SignCube SignCube::generate(std::size_t n, std::size_t v,
                            const std::function<Sign(std::span<const std::size_t>)>& fn) {
  const auto volume = checked_volume(n, v);
  if (!volume || n == 0 || v == 0) throw ShapeMismatch("invalid cube shape");
  std::vector<Sign> data;
  data.reserve(*volume);
  Index idx(n, 0);
  for (std::size_t flat = 0; flat < *volume; ++flat) {
    data.push_back(fn(idx));
    for (std::size_t j = n; j-- > 0;) {
      if (++idx[j] < v) break;
      idx[j] = 0;
    }
  }
  return SignCube(n, v, std::move(data));
}

std::size_t SignCube::offset(std::span<const std::size_t> idx) const {
  if (idx.size() != n_) {
    throw ShapeMismatch("index has " + std::to_string(idx.size()) + " components, cube has dimension " +
                        std::to_string(n_));
  }
  std::size_t flat = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    if (idx[j] >= v_) {
      throw IndexOutOfRange("index component " + std::to_string(idx[j]) + " at coordinate " +
                            std::to_string(j + 1) + " not below v=" + std::to_string(v_));
    }
    flat += idx[j] * strides_[j];
  }
  return flat;
}

Sign SignCube::at(std::span<const std::size_t> idx) const { return data_[offset(idx)]; }

SignCube layer(const SignCube& cube, const FixedCoords& fixed) {
  const std::size_t n = cube.dimension();
  const std::size_t v = cube.order();
  if (fixed.empty()) throw EmptyFix("a layer must fix at least one coordinate");
  if (fixed.size() >= n) throw FullFix("a layer must leave at least one coordinate free");
  std::size_t base = 0;
  std::vector<std::size_t> free_strides;
  for (std::size_t pos = 1; pos <= n; ++pos) {
    auto it = fixed.find(pos);
    if (it == fixed.end()) {
      free_strides.push_back(cube.stride(pos));
      continue;
    }
    if (it->second >= v) {
      throw IndexOutOfRange("fixed value " + std::to_string(it->second) + " not below v=" + std::to_string(v));
    }
    base += it->second * cube.stride(pos);
  }
  for (const auto& [pos, value] : fixed) {
    if (pos == 0 || pos > n) {
      throw IndexOutOfRange("coordinate position " + std::to_string(pos) + " outside 1.." + std::to_string(n));
    }
  }
  const std::size_t m = free_strides.size();
  return SignCube::generate(m, v, [&](std::span<const std::size_t> idx) {
    std::size_t flat = base;
    for (std::size_t j = 0; j < m; ++j) flat += idx[j] * free_strides[j];
    return cube[flat];
  });
}

std::string describe(const VerifyReport& report) {
  if (report.passed) return "PASS";
  std::string out = "FAIL axis=" + std::to_string(*report.axis) + " a=" + std::to_string(report.pair->first) +
                    " b=" + std::to_string(report.pair->second) + " dev=" + std::to_string(*report.deviation);
  if (!report.layer.empty()) {
    out += " layer=";
    bool first = true;
    for (const auto& [pos, value] : report.layer) {
      if (!first) out += ',';
      out += std::to_string(pos) + ':' + std::to_string(value);
      first = false;
    }
  }
  return out;
}

namespace detail {

std::int64_t SignBits::dot(const SignBits& other) const noexcept {
  std::int64_t differing = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) differing += std::popcount(words_[w] ^ other.words_[w]);
  return static_cast<std::int64_t>(length_) - 2 * differing;
}

}  // namespace detail

namespace {

// All (n-1)-dimensional layers orthogonal to `position`, bit-packed.
std::vector<detail::SignBits> pack_layers(const SignCube& cube, std::size_t position) {
  const std::size_t v = cube.order();
  const std::size_t stride = cube.stride(position);
  const std::size_t block = stride * v;
  const std::size_t m = cube.size() / v;
  std::vector<detail::SignBits> layers(v, detail::SignBits(m));
  const auto data = cube.data();
  for (std::size_t outer = 0; outer < cube.size() / block; ++outer) {
    for (std::size_t a = 0; a < v; ++a) {
      const std::size_t src = outer * block + a * stride;
      const std::size_t dst = outer * stride;
      for (std::size_t inner = 0; inner < stride; ++inner) {
        if (!data[src + inner].is_plus()) layers[a].set_minus(dst + inner);
      }
    }
  }
  return layers;
}

struct PairFailure {
  std::size_t b;
  std::int64_t dev;
};

std::optional<PairFailure> first_failure_from(const std::vector<detail::SignBits>& layers, std::size_t a) {
  for (std::size_t b = a + 1; b < layers.size(); ++b) {
    const std::int64_t dev = layers[a].dot(layers[b]);
    if (dev != 0) return PairFailure{b, dev};
  }
  return std::nullopt;
}

}  // namespace

VerifyReport is_hadamard(const SignCube& cube, VerifyOptions options) {
  const std::size_t n = cube.dimension();
  const std::size_t v = cube.order();
  if (n < 2) throw DimensionTooSmall("orthogonality of layers needs n >= 2, got n=" + std::to_string(n));
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, v));

  for (std::size_t position = 1; position <= n; ++position) {
    const auto layers = pack_layers(cube, position);
    std::vector<std::optional<PairFailure>> per_row(v);
    if (threads <= 1) {
      for (std::size_t a = 0; a < v; ++a) {
        per_row[a] = first_failure_from(layers, a);
        if (per_row[a]) break;
      }
    } else {
      // Rows are claimed in increasing order; once a failure is known, rows
      // above it cannot change the lexicographic first violation.
      std::atomic<std::size_t> next{0};
      std::atomic<std::size_t> earliest{v};
      auto worker = [&] {
        for (std::size_t a = next++; a < v && a < earliest.load(); a = next++) {
          per_row[a] = first_failure_from(layers, a);
          if (per_row[a]) {
            std::size_t seen = earliest.load();
            while (a < seen && !earliest.compare_exchange_weak(seen, a)) {
            }
          }
        }
      };
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (std::size_t a = 0; a < v; ++a) {
      if (per_row[a]) {
        const std::uint64_t checked = (position - 1) * pairs_per_axis(v) + pair_rank(v, a, per_row[a]->b) + 1;
        return failure(position, a, per_row[a]->b, per_row[a]->dev, checked);
      }
    }
  }
  VerifyReport report;
  report.checked_pairs = n * pairs_per_axis(v);
  return report;
}

VerifyReport is_proper(const SignCube& cube) {
  const std::size_t n = cube.dimension();
  const std::size_t v = cube.order();
  if (n < 2) throw DimensionTooSmall("2-dimensional layers need n >= 2, got n=" + std::to_string(n));

  std::uint64_t checked = 0;
  std::vector<detail::SignBits> rows(v, detail::SignBits(v));
  std::vector<detail::SignBits> cols(v, detail::SignBits(v));

  for (std::size_t row_pos = 1; row_pos <= n; ++row_pos) {
    for (std::size_t col_pos = row_pos + 1; col_pos <= n; ++col_pos) {
      std::vector<std::size_t> fixed_positions;
      for (std::size_t pos = 1; pos <= n; ++pos) {
        if (pos != row_pos && pos != col_pos) fixed_positions.push_back(pos);
      }
      const std::size_t row_stride = cube.stride(row_pos);
      const std::size_t col_stride = cube.stride(col_pos);
      std::vector<std::size_t> values(fixed_positions.size(), 0);
      const std::size_t assignments = cube.size() / (v * v);
      for (std::size_t assignment = 0; assignment < assignments; ++assignment) {
        std::size_t base = 0;
        for (std::size_t i = 0; i < values.size(); ++i) base += values[i] * cube.stride(fixed_positions[i]);

        std::fill(rows.begin(), rows.end(), detail::SignBits(v));
        std::fill(cols.begin(), cols.end(), detail::SignBits(v));
        for (std::size_t r = 0; r < v; ++r) {
          for (std::size_t c = 0; c < v; ++c) {
            if (!cube[base + r * row_stride + c * col_stride].is_plus()) {
              rows[r].set_minus(c);
              cols[c].set_minus(r);
            }
          }
        }

        auto scan = [&](const std::vector<detail::SignBits>& lines, std::size_t axis) -> std::optional<VerifyReport> {
          for (std::size_t a = 0; a < v; ++a) {
            for (std::size_t b = a + 1; b < v; ++b) {
              ++checked;
              const std::int64_t dev = lines[a].dot(lines[b]);
              if (dev != 0) {
                VerifyReport r = failure(axis, a, b, dev, checked);
                for (std::size_t i = 0; i < values.size(); ++i) r.layer[fixed_positions[i]] = values[i];
                return r;
              }
            }
          }
          return std::nullopt;
        };
        if (auto r = scan(rows, row_pos)) return *r;
        if (auto r = scan(cols, col_pos)) return *r;

        for (std::size_t i = values.size(); i-- > 0;) {
          if (++values[i] < v) break;
          values[i] = 0;
        }
      }
    }
  }
  VerifyReport report;
  report.checked_pairs = checked;
  return report;
}

std::string serialize(const SignCube& cube) {
  const std::size_t v = cube.order();
  std::string out = "HDM " + std::to_string(cube.dimension()) + ' ' + std::to_string(v) + '\n';
  out.reserve(out.size() + cube.size() + cube.size() / v);
  const auto data = cube.data();
  for (std::size_t i = 0; i < data.size(); ++i) {
    out += data[i].is_plus() ? '+' : '-';
    if (i % v == v - 1) out += '\n';
  }
  return out;
}

namespace {

// Strict positive decimal: digits only, no sign, no leading zero.
std::optional<std::size_t> parse_positive(std::string_view s) {
  if (s.empty() || s.size() > 9 || s[0] == '0') return std::nullopt;
  std::size_t value = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(ch - '0');
  }
  return value;
}

}  // namespace

SignCube parse(std::string_view text) {
  std::size_t line_no = 1;
  auto next_line = [&](std::string_view& rest, std::string_view& line) {
    const std::size_t nl = rest.find('\n');
    if (nl == std::string_view::npos) {
      throw ParseError(line_no, rest.size() + 1, rest.empty() ? "unexpected end of input" : "missing line feed");
    }
    line = rest.substr(0, nl);
    rest.remove_prefix(nl + 1);
  };

  std::string_view rest = text;
  std::string_view header;
  next_line(rest, header);
  if (header.substr(0, 4) != "HDM ") throw ParseError(1, 1, "expected header 'HDM <n> <v>'");
  const std::string_view fields = header.substr(4);
  const std::size_t space = fields.find(' ');
  if (space == std::string_view::npos) throw ParseError(1, header.size() + 1, "header is missing the order");
  const auto n = parse_positive(fields.substr(0, space));
  if (!n) throw ParseError(1, 5, "dimension must be a positive decimal integer");
  const auto v = parse_positive(fields.substr(space + 1));
  if (!v) throw ParseError(1, 5 + space + 1, "order must be a positive decimal integer");
  const auto volume = checked_volume(*n, *v);
  if (!volume) throw ParseError(1, 5, "v^n too large");

  std::vector<Sign> data;
  data.reserve(*volume);
  const std::size_t lines = *volume / *v;
  for (std::size_t i = 0; i < lines; ++i) {
    ++line_no;
    std::string_view line;
    next_line(rest, line);
    for (std::size_t col = 0; col < line.size(); ++col) {
      if (col >= *v) throw ParseError(line_no, col + 1, "line longer than v=" + std::to_string(*v));
      const char ch = line[col];
      if (ch == '+') {
        data.push_back(kPlus);
      } else if (ch == '-') {
        data.push_back(kMinus);
      } else {
        throw ParseError(line_no, col + 1, "unexpected character; expected '+' or '-'");
      }
    }
    if (line.size() < *v) throw ParseError(line_no, line.size() + 1, "line shorter than v=" + std::to_string(*v));
  }
  if (!rest.empty()) throw ParseError(line_no + 1, 1, "trailing content after " + std::to_string(lines) + " rows");
  return SignCube(*n, *v, std::move(data));
}

}  // namespace hdm
