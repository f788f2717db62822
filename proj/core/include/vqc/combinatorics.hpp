#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vqc {

// Integer partition stored weakly decreasing with trailing zeros removed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // Accepts "3,3,2,1"; "" and "0" denote the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    // 1-based part access; zero beyond the length.
    int part(int i) const;

    bool fits(int rows, int cols) const;
    bool contains(const Partition& other) const;
    Partition transpose() const;

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// (lambda^vee)_i = cols - lambda_{rows+1-i}; throws if lambda is outside the box.
Partition complement(const Partition& lambda, int rows, int cols);

// All partitions fitting in a rows x cols box, sorted lexicographically on parts.
std::vector<Partition> partitions_in_box(int rows, int cols);

// All partitions of a fixed size fitting in a rows x cols box.
std::vector<Partition> partitions_of_size_in_box(int size, int rows, int cols);

// True when outer/inner is a vertical strip (at most one box per row).
bool is_vertical_strip(const Partition& outer, const Partition& inner);
// True when outer/inner is a horizontal strip (at most one box per column).
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

// Partitions nu contained in lambda with lambda/nu a vertical (resp. horizontal) strip of r boxes.
std::vector<Partition> remove_vertical_strips(const Partition& lambda, int r);
std::vector<Partition> remove_horizontal_strips(const Partition& lambda, int r);
// Partitions nu containing lambda with nu/lambda a vertical strip of r boxes and at most max_rows rows.
std::vector<Partition> add_vertical_strips(const Partition& lambda, int r, int max_rows);

// Level-k dominant integral weight of affine sl(n), given by Dynkin labels (m_0, ..., m_{n-1}).
class AffineWeight {
public:
    AffineWeight() = default;
    explicit AffineWeight(std::vector<int> labels);

    // Inverse of the map P: mu in the (n-1) x k box, with m_0 = k - mu_1.
    static AffineWeight from_partition(const Partition& mu, int n, int k);
    // Inverse of the map P-hat: m_0 = mu_n and m_i = mu_i - mu_{i+1}; the level is mu_1.
    static AffineWeight from_boxed(const Partition& mu, int n);

    int rank() const { return static_cast<int>(m_.size()); }
    int level() const;
    // Label m_i with the index taken mod n.
    int label(int i) const;
    const std::vector<int>& labels() const { return m_; }

    std::string str() const;

    friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
    friend auto operator<=>(const AffineWeight&, const AffineWeight&) = default;

private:
    std::vector<int> m_;
};

// The map P: mu_i = sum_{j=i}^{n-1} m_j, a partition in the (n-1) x k box.
Partition weight_to_partition(const AffineWeight& w);
// The map P-hat: P(w) with m_0 columns of height n added, a partition in the n x k box.
Partition weight_to_boxed(const AffineWeight& w);
// Cyclic shift of labels: new m_{i-1} = old m_i.
AffineWeight rot(const AffineWeight& w);
// Charge conjugation: fixes m_0 and reverses m_1, ..., m_{n-1}.
AffineWeight flip(const AffineWeight& w);

// Add a row of k boxes on top of mu and strip all columns of height n.
// On P-partitions this realises rot^{-1}.
Partition add_row_strip_columns(const Partition& mu, int n, int k);
// Complement of P-hat(w) in the n x k box; equals P(flip(w)).
Partition flip_on_partition(const AffineWeight& w);

// All level-k weights for affine sl(n), ordered lexicographically by P(w).
std::vector<AffineWeight> affine_weights(int n, int k);

// Binary word w_1 ... w_N; bit i-1 of the mask stores w_i. N is at most 63.
class Word01 {
public:
    Word01() = default;
    Word01(int length, std::uint64_t bits);

    static Word01 parse(std::string_view text);

    int length() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    int weight() const;
    // 1-based letter access.
    int at(int i) const { return static_cast<int>((bits_ >> (i - 1)) & 1U); }
    Word01 with(int i, int value) const;

    // Number of ones among w_1..w_i, extended to all integers by n_{i+N} = n_i + k.
    int n_count(int i) const;

    Word01 rotated() const;      // w_2 ... w_N w_1
    Word01 reversed() const;     // w_N ... w_1
    Word01 bitflipped() const;   // swap 0 and 1

    std::string str() const;

    friend bool operator==(const Word01&, const Word01&) = default;
    friend auto operator<=>(const Word01&, const Word01&) = default;

private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

// 1-positions l_i = lambda_{k+1-i} + i; lambda must lie in the k x (N-k) box.
Word01 word_from_partition(const Partition& lambda, int k, int big_n);
Partition word_to_partition(const Word01& w);

// Partition-level rotation: drop a column if w_1 = 0, otherwise prepend a full row.
Partition rot_partition(const Partition& lambda, int k, int big_n);

// All words of length N and weight k, ordered by their partitions.
std::vector<Word01> words_of_weight(int big_n, int k);

}  // namespace vqc
