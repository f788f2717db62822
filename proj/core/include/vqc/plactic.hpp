#pragma once

#include "vqc/boson.hpp"
#include "vqc/combinatorics.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace vqc {

// n-tuple of partitions (pi^(0), ..., pi^(n-1)).
class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(int n) : parts_(static_cast<std::size_t>(n)) {}
    explicit MultiPartition(std::vector<Partition> parts) : parts_(std::move(parts)) {}

    int rank() const { return static_cast<int>(parts_.size()); }
    const Partition& at(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    Partition& at(int i) { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<Partition>& parts() const { return parts_; }
    int size() const;

    // Every column height l >= 1 is missing from at least one component.
    bool is_aperiodic() const;

    std::string str() const;

    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;

private:
    std::vector<Partition> parts_;
};

// a_i: a new first-row box in pi^(i) if pi^(i+1) is empty, otherwise the first column of pi^(i+1)
// moves to pi^(i) with one more box. Indices are taken mod n.
MultiPartition dengdu_apply(int i, const MultiPartition& pi);
// w(empty, ..., empty) with the rightmost letter applied first.
MultiPartition word_to_multipartition(const GenWord& w, int n);
// Standard word read off by peeling column tops in cyclic order; throws if pi is not aperiodic.
GenWord multipartition_to_word(const MultiPartition& pi);
// Representative of w with the same action on every H_k: the reversed standard word of the reversed word.
// The step a_i respects the relations a_{i+1}a_i^2 = a_i a_{i+1} a_i when letters act left to right.
GenWord plactic_representative(const GenWord& w, int n);

// Rows of a Young tableau, top to bottom.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    // Newline-separated rows of comma-separated entries.
    static Tableau parse(std::string_view text);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    Partition shape() const;
    // Columns top to bottom.
    std::vector<std::vector<int>> columns() const;

    bool is_semistandard() const;
    // Row i holds at most as many j's as row i-1 holds (j-1)'s.
    bool is_strict_normal() const;

    std::string str() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

// Columns left to right, each read bottom to top.
GenWord column_word(const Tableau& t);

// Situations of the basic insertion procedure, in the order they are tried.
enum class NormalizeRule { empty_column, lower_and_equal, lower_only, upper_only, upper_and_equal, single_equal, all_greater, all_less };

struct NormalizeStep {
    NormalizeRule rule;
    int column = 0;  // 0-based column receiving the value
    int value = 0;
};

struct NormalizeResult {
    Tableau tableau;
    std::vector<NormalizeStep> trace;
};

// Short label of a rule: "1", "2", "3", "4", "5", "6a", "6b", "6c".
std::string rule_label(NormalizeRule rule);

// Rewrites a semistandard tableau into strict normal form with a plactic-equivalent column word.
NormalizeResult normalize_tableau_traced(const Tableau& t);
Tableau normalize_tableau(const Tableau& t);

}  // namespace vqc
