#include "vqc/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace vqc {

namespace {

void strip_zeros(std::vector<int>& parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    strip_zeros(parts_);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return Partition{};
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view token = trim(text.substr(pos, next - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("cannot parse partition '" + std::string(text) + "'");
        parts.push_back(value);
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

bool Partition::fits(int rows, int cols) const {
    return length() <= rows && (parts_.empty() || parts_.front() <= cols);
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 1; i <= other.length(); ++i)
        if (other.part(i) > part(i)) return false;
    return true;
}

Partition Partition::transpose() const {
    std::vector<int> t;
    if (parts_.empty()) return Partition{};
    t.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
    return Partition(std::move(t));
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition complement(const Partition& lambda, int rows, int cols) {
    if (!lambda.fits(rows, cols))
        throw std::invalid_argument("partition " + lambda.str() + " does not fit the " + std::to_string(rows) +
                                    "x" + std::to_string(cols) + " box");
    std::vector<int> out(static_cast<std::size_t>(rows));
    for (int i = 1; i <= rows; ++i) out[static_cast<std::size_t>(i - 1)] = cols - lambda.part(rows + 1 - i);
    return Partition(std::move(out));
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int max_part) {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == rows) return;
        for (int p = 1; p <= max_part; ++p) {
            cur.push_back(p);
            rec(p);
            cur.pop_back();
        }
    };
    if (rows >= 0 && cols >= 0) rec(cols);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_of_size_in_box(int size, int rows, int cols) {
    std::vector<Partition> out;
    for (auto& p : partitions_in_box(rows, cols))
        if (p.size() == size) out.push_back(p);
    return out;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    for (int i = 1; i <= outer.length(); ++i)
        if (outer.part(i) - inner.part(i) > 1) return false;
    return true;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    for (int i = 1; i <= outer.length(); ++i)
        if (inner.part(i) < outer.part(i + 1)) return false;
    return true;
}

namespace {

// Enumerates all vectors v with lo_i <= v_i <= hi_i, weakly decreasing, summing to target.
void enumerate_between(const std::vector<int>& lo, const std::vector<int>& hi, int target,
                       std::vector<Partition>& out) {
    const std::size_t len = lo.size();
    std::vector<int> cur(len);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int remaining, int bound) {
        if (i == len) {
            if (remaining == 0) out.emplace_back(cur);
            return;
        }
        int top = std::min(hi[i], bound);
        for (int v = top; v >= lo[i]; --v) {
            int need = remaining - v;
            if (need < 0) continue;
            cur[i] = v;
            rec(i + 1, need, v);
        }
    };
    rec(0, target, hi.empty() ? 0 : hi.front());
    std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<Partition> remove_vertical_strips(const Partition& lambda, int r) {
    std::vector<Partition> out;
    if (r < 0) return out;
    const int len = lambda.length();
    std::vector<int> lo(static_cast<std::size_t>(len)), hi(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i) {
        hi[static_cast<std::size_t>(i - 1)] = lambda.part(i);
        lo[static_cast<std::size_t>(i - 1)] = std::max(lambda.part(i) - 1, 0);
    }
    enumerate_between(lo, hi, lambda.size() - r, out);
    return out;
}

std::vector<Partition> remove_horizontal_strips(const Partition& lambda, int r) {
    std::vector<Partition> out;
    if (r < 0) return out;
    const int len = lambda.length();
    std::vector<int> lo(static_cast<std::size_t>(len)), hi(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i) {
        hi[static_cast<std::size_t>(i - 1)] = lambda.part(i);
        lo[static_cast<std::size_t>(i - 1)] = lambda.part(i + 1);
    }
    enumerate_between(lo, hi, lambda.size() - r, out);
    return out;
}

std::vector<Partition> add_vertical_strips(const Partition& lambda, int r, int max_rows) {
    std::vector<Partition> out;
    if (r < 0 || lambda.length() > max_rows) return out;
    std::vector<int> lo(static_cast<std::size_t>(max_rows)), hi(static_cast<std::size_t>(max_rows));
    for (int i = 1; i <= max_rows; ++i) {
        lo[static_cast<std::size_t>(i - 1)] = lambda.part(i);
        hi[static_cast<std::size_t>(i - 1)] = lambda.part(i) + 1;
    }
    enumerate_between(lo, hi, lambda.size() + r, out);
    return out;
}

AffineWeight::AffineWeight(std::vector<int> labels) : m_(std::move(labels)) {
    if (m_.size() < 2) throw std::invalid_argument("affine weight needs rank n >= 2");
    for (int m : m_)
        if (m < 0) throw std::invalid_argument("Dynkin labels must be nonnegative");
}

AffineWeight AffineWeight::from_partition(const Partition& mu, int n, int k) {
    if (!mu.fits(n - 1, k))
        throw std::invalid_argument("partition " + mu.str() + " is not in the (n-1) x k box");
    std::vector<int> m(static_cast<std::size_t>(n));
    m[0] = k - mu.part(1);
    for (int i = 1; i < n; ++i) m[static_cast<std::size_t>(i)] = mu.part(i) - mu.part(i + 1);
    return AffineWeight(std::move(m));
}

AffineWeight AffineWeight::from_boxed(const Partition& mu, int n) {
    if (mu.length() > n) throw std::invalid_argument("partition " + mu.str() + " has more than n rows");
    std::vector<int> m(static_cast<std::size_t>(n));
    m[0] = mu.part(n);
    for (int i = 1; i < n; ++i) m[static_cast<std::size_t>(i)] = mu.part(i) - mu.part(i + 1);
    return AffineWeight(std::move(m));
}

int AffineWeight::level() const { return std::accumulate(m_.begin(), m_.end(), 0); }

int AffineWeight::label(int i) const {
    const int n = rank();
    return m_[static_cast<std::size_t>(((i % n) + n) % n)];
}

std::string AffineWeight::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < m_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(m_[i]);
    }
    return out + ")";
}

Partition weight_to_partition(const AffineWeight& w) {
    const int n = w.rank();
    std::vector<int> mu(static_cast<std::size_t>(n - 1));
    int acc = 0;
    for (int i = n - 1; i >= 1; --i) {
        acc += w.label(i);
        mu[static_cast<std::size_t>(i - 1)] = acc;
    }
    return Partition(std::move(mu));
}

Partition weight_to_boxed(const AffineWeight& w) {
    const int n = w.rank();
    std::vector<int> mu(static_cast<std::size_t>(n));
    int acc = w.label(0);
    mu[static_cast<std::size_t>(n - 1)] = acc;
    for (int i = n - 1; i >= 1; --i) {
        acc += w.label(i);
        mu[static_cast<std::size_t>(i - 1)] = acc;
    }
    return Partition(std::move(mu));
}

AffineWeight rot(const AffineWeight& w) {
    const int n = w.rank();
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = w.label(i + 1);
    return AffineWeight(std::move(m));
}

AffineWeight flip(const AffineWeight& w) {
    const int n = w.rank();
    std::vector<int> m(static_cast<std::size_t>(n));
    m[0] = w.label(0);
    for (int i = 1; i < n; ++i) m[static_cast<std::size_t>(i)] = w.label(n - i);
    return AffineWeight(std::move(m));
}

Partition add_row_strip_columns(const Partition& mu, int n, int k) {
    if (!mu.fits(n - 1, k)) throw std::invalid_argument("partition is not in the (n-1) x k box");
    std::vector<int> rows{k};
    for (int i = 1; i <= n - 1; ++i) rows.push_back(mu.part(i));
    const int full = rows.back();
    for (int& r : rows) r -= full;
    return Partition(std::move(rows));
}

Partition flip_on_partition(const AffineWeight& w) {
    return complement(weight_to_boxed(w), w.rank(), w.level());
}

std::vector<AffineWeight> affine_weights(int n, int k) {
    std::vector<AffineWeight> out;
    for (auto& mu : partitions_in_box(n - 1, k)) out.push_back(AffineWeight::from_partition(mu, n, k));
    return out;
}

Word01::Word01(int length, std::uint64_t bits) : n_(length), bits_(bits) {
    if (length < 0 || length > 63) throw std::invalid_argument("word length must be in [0, 63]");
    if (length < 64 && (bits >> length) != 0) throw std::invalid_argument("word has bits beyond its length");
}

Word01 Word01::parse(std::string_view text) {
    std::uint64_t bits = 0;
    int len = 0;
    for (char c : text) {
        if (c != '0' && c != '1') throw std::invalid_argument("word letters must be 0 or 1");
        if (c == '1') bits |= (std::uint64_t{1} << len);
        ++len;
    }
    return Word01(len, bits);
}

int Word01::weight() const { return std::popcount(bits_); }

Word01 Word01::with(int i, int value) const {
    const std::uint64_t mask = std::uint64_t{1} << (i - 1);
    return Word01(n_, value ? (bits_ | mask) : (bits_ & ~mask));
}

int Word01::n_count(int i) const {
    const int wraps = floor_div(i, n_);
    const int r = i - wraps * n_;
    const std::uint64_t low = r == 0 ? 0 : (bits_ & ((std::uint64_t{1} << r) - 1));
    return std::popcount(low) + wraps * weight();
}

Word01 Word01::rotated() const {
    if (n_ == 0) return *this;
    const std::uint64_t first = bits_ & 1U;
    return Word01(n_, (bits_ >> 1) | (first << (n_ - 1)));
}

Word01 Word01::reversed() const {
    std::uint64_t out = 0;
    for (int i = 0; i < n_; ++i)
        if ((bits_ >> i) & 1U) out |= std::uint64_t{1} << (n_ - 1 - i);
    return Word01(n_, out);
}

Word01 Word01::bitflipped() const {
    const std::uint64_t all = n_ == 0 ? 0 : ((std::uint64_t{1} << n_) - 1);
    return Word01(n_, ~bits_ & all);
}

std::string Word01::str() const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if ((bits_ >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
    return out;
}

Word01 word_from_partition(const Partition& lambda, int k, int big_n) {
    if (!lambda.fits(k, big_n - k))
        throw std::invalid_argument("partition " + lambda.str() + " is not in the k x (N-k) box");
    std::uint64_t bits = 0;
    for (int i = 1; i <= k; ++i) bits |= std::uint64_t{1} << (lambda.part(k + 1 - i) + i - 1);
    return Word01(big_n, bits);
}

Partition word_to_partition(const Word01& w) {
    const int k = w.weight();
    std::vector<int> parts(static_cast<std::size_t>(k));
    int i = 0;
    for (int pos = 1; pos <= w.length(); ++pos) {
        if (!w.at(pos)) continue;
        ++i;
        parts[static_cast<std::size_t>(k - i)] = pos - i;
    }
    return Partition(std::move(parts));
}

Partition rot_partition(const Partition& lambda, int k, int big_n) {
    const Word01 w = word_from_partition(lambda, k, big_n);
    const int n = big_n - k;
    std::vector<int> parts;
    if (w.at(1) == 0) {
        for (int i = 1; i <= k; ++i) parts.push_back(lambda.part(i) - 1);
    } else {
        parts.push_back(n);
        for (int i = 1; i <= k - 1; ++i) parts.push_back(lambda.part(i));
    }
    return Partition(std::move(parts));
}

std::vector<Word01> words_of_weight(int big_n, int k) {
    std::vector<Word01> out;
    for (auto& p : partitions_in_box(k, big_n - k)) out.push_back(word_from_partition(p, k, big_n));
    return out;
}

}  // namespace vqc
