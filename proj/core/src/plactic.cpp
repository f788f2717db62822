#include "vqc/plactic.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace vqc {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

Partition add_column(const Partition& p, int height) {
    const Partition conj = p.transpose();
    std::vector<int> heights = conj.parts();
    heights.push_back(height);
    std::sort(heights.begin(), heights.end(), std::greater<>());
    return Partition(heights).transpose();
}

Partition drop_first_column(const Partition& p) {
    std::vector<int> parts = p.parts();
    for (int& x : parts) --x;
    return Partition(parts);
}

}  // namespace

int MultiPartition::size() const {
    int total = 0;
    for (const auto& p : parts_) total += p.size();
    return total;
}

bool MultiPartition::is_aperiodic() const {
    int tallest = 0;
    for (const auto& p : parts_) tallest = std::max(tallest, p.length());
    for (int l = 1; l <= tallest; ++l) {
        bool missing = false;
        for (const auto& p : parts_) {
            const Partition conj = p.transpose();
            const auto& heights = conj.parts();
            if (std::find(heights.begin(), heights.end(), l) == heights.end()) {
                missing = true;
                break;
            }
        }
        if (!missing) return false;
    }
    return true;
}

std::string MultiPartition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += " | ";
        out += parts_[i].str();
    }
    return out + ")";
}

MultiPartition dengdu_apply(int i, const MultiPartition& pi) {
    const int n = pi.rank();
    if (n < 2) throw std::invalid_argument("multipartitions need n >= 2");
    const int here = mod(i, n);
    const int next = mod(i + 1, n);
    MultiPartition out = pi;
    const Partition& source = pi.at(next);
    if (source.empty()) {
        out.at(here) = add_column(pi.at(here), 1);
    } else {
        out.at(next) = drop_first_column(source);
        out.at(here) = add_column(pi.at(here), source.length() + 1);
    }
    return out;
}

MultiPartition word_to_multipartition(const GenWord& w, int n) {
    MultiPartition pi(n);
    for (auto it = w.rbegin(); it != w.rend(); ++it) pi = dengdu_apply(*it, pi);
    return pi;
}

GenWord multipartition_to_word(const MultiPartition& pi) {
    const int n = pi.rank();
    if (n < 2) throw std::invalid_argument("multipartitions need n >= 2");
    // Pushed-down columns as (top label, height).
    std::vector<std::pair<int, int>> towers;
    for (int i = 0; i < n; ++i) {
        const Partition conj = pi.at(i).transpose();
        for (int h : conj.parts()) towers.emplace_back(i, h);
    }

    GenWord word;
    int label = 0;
    int idle = 0;
    while (!towers.empty()) {
        const int next = mod(label + 1, n);
        int ceiling = 0;
        for (const auto& [top, h] : towers)
            if (top == next) ceiling = std::max(ceiling, h);
        bool removed = false;
        for (auto& [top, h] : towers) {
            if (top != label || h <= ceiling) continue;
            word.push_back(label);
            top = next;
            --h;
            removed = true;
        }
        std::erase_if(towers, [](const auto& t) { return t.second == 0; });
        idle = removed ? 0 : idle + 1;
        if (idle >= n) throw std::invalid_argument("multipartition " + pi.str() + " is not aperiodic");
        label = next;
    }
    return word;
}

GenWord plactic_representative(const GenWord& w, int n) {
    GenWord reversed(w.rbegin(), w.rend());
    GenWord word = multipartition_to_word(word_to_multipartition(reversed, n));
    std::reverse(word.begin(), word.end());
    return word;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::erase_if(rows_, [](const auto& r) { return r.empty(); });
    for (std::size_t i = 1; i < rows_.size(); ++i)
        if (rows_[i].size() > rows_[i - 1].size()) throw std::invalid_argument("tableau rows must weakly shrink");
}

Tableau Tableau::parse(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        std::vector<int> row;
        std::size_t p = 0;
        while (p < line.size()) {
            while (p < line.size() && (line[p] == ' ' || line[p] == ',' || line[p] == '\r')) ++p;
            if (p >= line.size()) break;
            int value = 0;
            const auto [ptr, ec] = std::from_chars(line.data() + p, line.data() + line.size(), value);
            if (ec != std::errc{}) throw std::invalid_argument("cannot parse tableau row '" + std::string(line) + "'");
            p = static_cast<std::size_t>(ptr - line.data());
            row.push_back(value);
        }
        if (!row.empty()) rows.push_back(std::move(row));
        pos = end + 1;
    }
    return Tableau(std::move(rows));
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(parts);
}

std::vector<std::vector<int>> Tableau::columns() const {
    std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_.front().size());
    for (const auto& r : rows_)
        for (std::size_t c = 0; c < r.size(); ++c) cols[c].push_back(r[c]);
    return cols;
}

bool Tableau::is_semistandard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t c = 0; c < rows_[i].size(); ++c) {
            if (c > 0 && rows_[i][c] < rows_[i][c - 1]) return false;
            if (i > 0 && rows_[i][c] <= rows_[i - 1][c]) return false;
        }
    }
    return true;
}

bool Tableau::is_strict_normal() const {
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        std::map<int, int> above;
        std::map<int, int> here;
        for (int x : rows_[i - 1]) ++above[x];
        for (int x : rows_[i]) ++here[x];
        for (const auto& [j, count] : here)
            if (count > above[j - 1]) return false;
    }
    return true;
}

std::string Tableau::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i > 0) out += '\n';
        for (std::size_t c = 0; c < rows_[i].size(); ++c) {
            if (c > 0) out += ',';
            out += std::to_string(rows_[i][c]);
        }
    }
    return out;
}

GenWord column_word(const Tableau& t) {
    GenWord word;
    for (const auto& col : t.columns()) word.insert(word.end(), col.rbegin(), col.rend());
    return word;
}

std::string rule_label(NormalizeRule rule) {
    switch (rule) {
        case NormalizeRule::empty_column: return "1";
        case NormalizeRule::lower_and_equal: return "2";
        case NormalizeRule::lower_only: return "3";
        case NormalizeRule::upper_only: return "4";
        case NormalizeRule::upper_and_equal: return "5";
        case NormalizeRule::single_equal: return "6a";
        case NormalizeRule::all_greater: return "6b";
        case NormalizeRule::all_less: return "6c";
    }
    return "?";
}

namespace {

struct Cell {
    int value = 0;
    bool crossed = false;
};

using Column = std::vector<Cell>;

class Normalizer {
public:
    explicit Normalizer(const Tableau& t) {
        for (const auto& col : t.columns()) {
            Column c;
            for (int x : col) c.push_back(Cell{x, false});
            cols_.push_back(std::move(c));
        }
    }

    NormalizeResult run() {
        constexpr int kMaxProcedures = 1'000'000;
        for (int round = 0;; ++round) {
            if (round >= kMaxProcedures) throw std::logic_error("tableau normalisation did not terminate");
            if (!cross_first_violation()) break;
        }
        return NormalizeResult{collapse(), std::move(trace_)};
    }

private:
    // Scans columns right to left, each top to bottom, for consecutive entries differing by more than one.
    bool cross_first_violation() {
        for (std::size_t c = cols_.size(); c-- > 0;) {
            Column& col = cols_[c];
            int previous = -1;
            for (auto& cell : col) {
                if (cell.crossed) continue;
                if (previous >= 0 && cell.value - previous > 1) {
                    cell.crossed = true;
                    insert(c + 1, cell.value);
                    return true;
                }
                previous = cell.value;
            }
        }
        return false;
    }

    static int find(const Column& col, int value) {
        for (std::size_t r = 0; r < col.size(); ++r)
            if (!col[r].crossed && col[r].value == value) return static_cast<int>(r);
        return -1;
    }

    void log(NormalizeRule rule, std::size_t column, int value) {
        trace_.push_back(NormalizeStep{rule, static_cast<int>(column), value});
    }

    // Carries the value j into column d.
    void insert(std::size_t d, int j) {
        for (;;) {
            const bool exists = d < cols_.size() && find_any(cols_[d]);
            if (!exists) {
                log(NormalizeRule::empty_column, d, j);
                if (d >= cols_.size()) cols_.resize(d + 1);
                if (cols_[d].empty()) cols_[d].push_back(Cell{j, false});
                else cols_[d][0] = Cell{j, false};
                return;
            }
            Column& col = cols_[d];
            const int lower = find(col, j - 1);
            const int equal = find(col, j);
            const int upper = find(col, j + 1);
            if (lower >= 0 && equal >= 0) {
                log(NormalizeRule::lower_and_equal, d, j);
                ++d;
                continue;
            }
            if (lower >= 0) {
                log(NormalizeRule::lower_only, d, j);
                const auto below = static_cast<std::size_t>(lower + 1);
                if (below < col.size() && col[below].crossed) col[below] = Cell{j, false};
                else col.insert(col.begin() + static_cast<std::ptrdiff_t>(below), Cell{j, false});
                return;
            }
            if (upper >= 0 && equal < 0) {
                log(NormalizeRule::upper_only, d, j);
                col[static_cast<std::size_t>(upper)].value = j;
                ++j;
                ++d;
                continue;
            }
            if (upper >= 0) {
                log(NormalizeRule::upper_and_equal, d, j);
                ++d;
                continue;
            }
            bool greater = true;
            bool less = true;
            int uncrossed = 0;
            for (const auto& cell : col) {
                if (cell.crossed) continue;
                ++uncrossed;
                greater = greater && cell.value > j;
                less = less && cell.value < j;
            }
            if (equal >= 0 && uncrossed == 1) {
                log(NormalizeRule::single_equal, d, j);
                cols_.insert(cols_.begin() + static_cast<std::ptrdiff_t>(d + 1), col);
                return;
            }
            if (greater) {
                log(NormalizeRule::all_greater, d, j);
                const int displaced = col[0].value;
                col[0].value = j;
                j = displaced;
                ++d;
                continue;
            }
            if (less) {
                log(NormalizeRule::all_less, d, j);
                ++d;
                continue;
            }
            throw std::logic_error("no insertion rule applies to value " + std::to_string(j) + " at column " +
                                   std::to_string(d));
        }
    }

    static bool find_any(const Column& col) {
        return std::any_of(col.begin(), col.end(), [](const Cell& c) { return !c.crossed; });
    }

    // Drops crossed cells, closes gaps upward, then shifts every row to the left.
    Tableau collapse() const {
        std::vector<std::vector<int>> rows;
        for (const auto& col : cols_) {
            std::size_t r = 0;
            for (const auto& cell : col) {
                if (cell.crossed) continue;
                if (rows.size() <= r) rows.emplace_back();
                rows[r++].push_back(cell.value);
            }
        }
        return Tableau(std::move(rows));
    }

    std::vector<Column> cols_;
    std::vector<NormalizeStep> trace_;
};

}  // namespace

NormalizeResult normalize_tableau_traced(const Tableau& t) {
    if (!t.is_semistandard()) throw std::invalid_argument("normalisation needs a semistandard tableau");
    if (t.is_strict_normal()) return NormalizeResult{t, {}};
    return Normalizer(t).run();
}

Tableau normalize_tableau(const Tableau& t) { return normalize_tableau_traced(t).tableau; }

}  // namespace vqc
