#include "mlr/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mlr {

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lengths;
    for (const auto& r : rows) lengths.push_back(static_cast<int>(r.size()));
    Partition shape;
    try {
        shape = Partition(lengths);
    } catch (const InvalidPartition&) {
        throw InvalidTableau("row lengths do not form a partition");
    }
    std::vector<std::vector<int>> columns(static_cast<std::size_t>(shape[1]));
    for (const auto& r : rows)
        for (std::size_t j = 0; j < r.size(); ++j) columns[j].push_back(r[j]);
    return from_columns(columns);
}

Tableau Tableau::from_columns(const std::vector<std::vector<int>>& columns) {
    std::vector<int> heights;
    for (const auto& c : columns) {
        if (c.empty()) throw InvalidTableau("empty column");
        heights.push_back(static_cast<int>(c.size()));
    }
    Tableau T;
    try {
        T.shape_ = conjugate(Partition(heights));
    } catch (const InvalidPartition&) {
        throw InvalidTableau("column heights must weakly decrease");
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& col = columns[c];
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (col[i] < 1) throw InvalidTableau("entries must be positive");
            if (i > 0 && col[i] <= col[i - 1]) throw InvalidTableau("columns must strictly increase");
            if (c > 0 && col[i] < columns[c - 1][i]) throw InvalidTableau("rows must weakly increase");
        }
    }
    T.columns_ = columns;
    return T;
}

std::vector<std::vector<int>> Tableau::rows() const {
    std::vector<std::vector<int>> r(static_cast<std::size_t>(shape_.length()));
    for (const auto& col : columns_)
        for (std::size_t i = 0; i < col.size(); ++i) r[i].push_back(col[i]);
    return r;
}

int Tableau::max_entry() const {
    int m = 0;
    for (const auto& col : columns_) m = std::max(m, col.back());
    return m;
}

Composition Tableau::weight(int n) const {
    if (n < 0) n = max_entry();
    Composition w(static_cast<std::size_t>(n), 0);
    for (const auto& col : columns_)
        for (int v : col) {
            if (v > n) throw SizeMismatch("tableau entry exceeds alphabet");
            ++w[static_cast<std::size_t>(v - 1)];
        }
    return w;
}

bool Tableau::is_rectangular() const {
    for (const auto& col : columns_)
        if (col.size() != columns_.front().size()) return false;
    return true;
}

std::string Tableau::render() const {
    int width = static_cast<int>(std::to_string(std::max(1, max_entry())).size());
    std::ostringstream os;
    for (const auto& row : rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            std::string s = std::to_string(row[j]);
            os << (j ? " " : "") << std::string(static_cast<std::size_t>(width) - s.size(), ' ') << s;
        }
        os << "\n";
    }
    return os.str();
}

namespace {

class SsytFiller {
public:
    SsytFiller(const Partition& mu, const Composition& chi, std::optional<int> cap)
        : mu_(mu), remaining_(chi), n_(static_cast<int>(chi.size())), cap_(cap),
          cells_(cells(mu)), placed_(static_cast<std::size_t>(mu.length()), 0) {
        for (int i = 1; i <= mu.length(); ++i)
            grid_.emplace_back(static_cast<std::size_t>(mu[i]), 0);
    }

    std::vector<Tableau> run() {
        if (feasible()) fill(0);
        return std::move(found_);
    }

private:
    bool done() const { return cap_ && static_cast<int>(found_.size()) > *cap_; }

    // Entries v can only sit in rows 1..v.
    bool feasible() const {
        int need = 0, free_cells = 0, row = 0;
        for (int v = 1; v <= n_; ++v) {
            need += remaining_[static_cast<std::size_t>(v - 1)];
            while (row < std::min(v, mu_.length())) {
                free_cells += mu_[row + 1] - placed_[static_cast<std::size_t>(row)];
                ++row;
            }
            if (need > free_cells) return false;
        }
        return true;
    }

    void fill(std::size_t idx) {
        if (done()) return;
        if (idx == cells_.size()) {
            found_.push_back(Tableau::from_rows(grid_));
            return;
        }
        const Cell c = cells_[idx];
        auto& row = grid_[static_cast<std::size_t>(c.row - 1)];
        int lo = c.row;
        if (c.col > 1) lo = std::max(lo, row[static_cast<std::size_t>(c.col - 2)]);
        if (c.row > 1) lo = std::max(lo, grid_[static_cast<std::size_t>(c.row - 2)][static_cast<std::size_t>(c.col - 1)] + 1);
        ++placed_[static_cast<std::size_t>(c.row - 1)];
        for (int v = lo; v <= n_ && !done(); ++v) {
            auto& rem = remaining_[static_cast<std::size_t>(v - 1)];
            if (rem == 0) continue;
            --rem;
            row[static_cast<std::size_t>(c.col - 1)] = v;
            if (feasible()) fill(idx + 1);
            ++rem;
        }
        --placed_[static_cast<std::size_t>(c.row - 1)];
        row[static_cast<std::size_t>(c.col - 1)] = 0;
    }

    const Partition& mu_;
    Composition remaining_;
    int n_;
    std::optional<int> cap_;
    std::vector<Cell> cells_;
    std::vector<int> placed_;
    std::vector<std::vector<int>> grid_;
    std::vector<Tableau> found_;
};

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& mu, const Composition& chi, std::optional<int> cap) {
    if (std::accumulate(chi.begin(), chi.end(), 0) != mu.size()) throw SizeMismatch("|mu| differs from the weight total");
    for (int c : chi)
        if (c < 0) throw SizeMismatch("negative weight entry");
    auto out = SsytFiller(mu, chi, cap).run();
    std::sort(out.begin(), out.end());
    return out;
}

long kostka(const Partition& mu, const Composition& chi) {
    if (std::accumulate(chi.begin(), chi.end(), 0) != mu.size()) return 0;
    for (int c : chi)
        if (c < 0) return 0;
    return static_cast<long>(enumerate_ssyt(mu, chi).size());
}

UniqueResult unique_ssyt(const Partition& mu, const Composition& chi) {
    if (std::accumulate(chi.begin(), chi.end(), 0) != mu.size()) return {};
    auto found = enumerate_ssyt(mu, chi, 1);
    if (found.empty()) return {};
    if (found.size() > 1) return {UniqueResult::Status::many, std::nullopt};
    return {UniqueResult::Status::one, found.front()};
}

const char* to_string(UniqueResult::Status s) {
    switch (s) {
        case UniqueResult::Status::zero: return "zero";
        case UniqueResult::Status::one: return "one";
        case UniqueResult::Status::many: return "many";
    }
    return "";
}

bool is_unique_by_columns(const Tableau& T) {
    const auto& cols = T.columns();
    for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t b = a + 1; b < cols.size(); ++b) {
            const auto& earlier = cols[a];
            const auto& later = cols[b];
            std::vector<int> missing;
            std::set_difference(later.begin(), later.end(), earlier.begin(), earlier.end(), std::back_inserter(missing));
            if (later.size() == earlier.size() ? missing.size() > 1 : !missing.empty()) return false;
        }
    return true;
}

const char* to_string(BlockKind k) {
    switch (k) {
        case BlockKind::first: return "first";
        case BlockKind::second: return "second";
        case BlockKind::third: return "third";
    }
    return "";
}

std::set<BlockKind> classify_block(const std::vector<std::vector<int>>& column_sets) {
    std::set<std::vector<int>> distinct;
    for (auto c : column_sets) {
        std::sort(c.begin(), c.end());
        distinct.insert(c);
    }
    if (distinct.empty()) throw NotUniqueBlock("no columns");
    const std::size_t k = distinct.begin()->size();
    std::vector<int> meet = *distinct.begin(), join;
    for (const auto& c : distinct) {
        if (c.size() != k) throw NotUniqueBlock("columns of a block must have equal height");
        std::vector<int> m;
        std::set_intersection(meet.begin(), meet.end(), c.begin(), c.end(), std::back_inserter(m));
        meet = std::move(m);
        std::vector<int> u;
        std::set_union(join.begin(), join.end(), c.begin(), c.end(), std::back_inserter(u));
        join = std::move(u);
    }
    std::set<BlockKind> kinds;
    if (distinct.size() == 1) kinds.insert(BlockKind::first);
    if (distinct.size() > 1 && meet.size() + 1 == k) kinds.insert(BlockKind::second);
    if (distinct.size() > 1 && join.size() == k + 1) kinds.insert(BlockKind::third);
    if (kinds.empty()) throw NotUniqueBlock("column sets are of no kind");
    return kinds;
}

std::vector<Tableau> rectangular_blocks(const Tableau& T) {
    std::vector<Tableau> out;
    const auto& cols = T.columns();
    std::size_t start = 0;
    for (std::size_t c = 1; c <= cols.size(); ++c) {
        if (c == cols.size() || cols[c].size() != cols[start].size()) {
            out.push_back(Tableau::from_columns({cols.begin() + static_cast<long>(start), cols.begin() + static_cast<long>(c)}));
            start = c;
        }
    }
    return out;
}

Tableau intrinsic(const Tableau& T) {
    if (!T.is_rectangular()) throw NotRectangular("intrinsic tableau needs a rectangular shape");
    if (T.empty()) return T;
    std::vector<int> common = T.columns().front();
    for (const auto& c : T.columns()) {
        std::vector<int> m;
        std::set_intersection(common.begin(), common.end(), c.begin(), c.end(), std::back_inserter(m));
        common = std::move(m);
    }
    std::vector<std::vector<int>> cols;
    for (const auto& c : T.columns()) {
        std::vector<int> kept;
        std::set_difference(c.begin(), c.end(), common.begin(), common.end(), std::back_inserter(kept));
        if (!kept.empty()) cols.push_back(std::move(kept));
    }
    return Tableau::from_columns(cols);
}

Tableau complement(const Tableau& T) {
    if (!T.is_rectangular()) throw NotRectangular("complement needs a rectangular shape");
    std::set<int> entries;
    for (const auto& c : T.columns()) entries.insert(c.begin(), c.end());
    const std::size_t k = T.empty() ? 0 : T.columns().front().size();
    if (T.empty() || entries.size() != k + 1) throw WrongKind("complement needs exactly k+1 distinct entries");
    const int l = *entries.rbegin();
    std::vector<int> row;
    for (const auto& c : T.columns()) {
        std::vector<int> missing;
        std::set_difference(entries.begin(), entries.end(), c.begin(), c.end(), std::back_inserter(missing));
        row.push_back(l + 1 - missing.front());
    }
    std::sort(row.begin(), row.end());
    return Tableau::from_rows({row});
}

Partition reversal(const Partition& lambda, int l, int N) {
    if (N <= lambda[1]) throw NTooSmall("N must exceed the first part of lambda");
    if (lambda.length() > l) throw SizeMismatch("lambda has more rows than the tableau alphabet");
    std::vector<int> r;
    for (int i = l; i >= 1; --i) r.push_back(N - lambda[i]);
    return Partition(r);
}

Partition reversal(const Partition& lambda, const Tableau& T, int N) { return reversal(lambda, T.max_entry(), N); }

std::vector<int> reading_word(const SkewTableau& T) {
    std::vector<int> w;
    for (const auto& row : T.rows) w.insert(w.end(), row.rbegin(), row.rend());
    return w;
}

bool is_lattice_word(const std::vector<int>& w) {
    std::vector<int> count;
    for (int v : w) {
        if (v < 1) return false;
        if (static_cast<int>(count.size()) < v + 1) count.resize(static_cast<std::size_t>(v + 1), 0);
        ++count[static_cast<std::size_t>(v)];
        if (v > 1 && count[static_cast<std::size_t>(v)] > count[static_cast<std::size_t>(v - 1)]) return false;
    }
    return true;
}

namespace {

class LrFiller {
public:
    LrFiller(const Partition& lambda, const Partition& mu, const Partition& nu)
        : lambda_(lambda), mu_(mu), nu_(nu), used_(static_cast<std::size_t>(mu.length() + 2), 0) {
        grid_.resize(static_cast<std::size_t>(nu.length()));
        for (int i = 1; i <= nu.length(); ++i) grid_[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(nu[i]), 0);
        // reading order: rows top to bottom, right to left
        for (int i = 1; i <= nu.length(); ++i)
            for (int j = nu[i]; j > lambda[i]; --j) order_.push_back({i, j});
    }

    std::vector<SkewTableau> run() {
        fill(0);
        return std::move(found_);
    }

private:
    void fill(std::size_t idx) {
        if (idx == order_.size()) {
            SkewTableau T{nu_, lambda_, {}};
            for (int i = 1; i <= nu_.length(); ++i) {
                const auto& g = grid_[static_cast<std::size_t>(i - 1)];
                T.rows.emplace_back(g.begin() + lambda_[i], g.end());
            }
            found_.push_back(std::move(T));
            return;
        }
        const Cell c = order_[idx];
        auto& row = grid_[static_cast<std::size_t>(c.row - 1)];
        int hi = mu_.length();
        if (c.col < nu_[c.row]) hi = std::min(hi, row[static_cast<std::size_t>(c.col)]);
        int lo = 1;
        if (c.row > 1 && c.col > lambda_[c.row - 1])
            lo = grid_[static_cast<std::size_t>(c.row - 2)][static_cast<std::size_t>(c.col - 1)] + 1;
        for (int v = lo; v <= hi; ++v) {
            auto& u = used_[static_cast<std::size_t>(v)];
            if (u == mu_[v]) continue;
            if (v > 1 && u + 1 > used_[static_cast<std::size_t>(v - 1)]) continue;
            ++u;
            row[static_cast<std::size_t>(c.col - 1)] = v;
            fill(idx + 1);
            --u;
        }
        row[static_cast<std::size_t>(c.col - 1)] = 0;
    }

    const Partition& lambda_;
    const Partition& mu_;
    const Partition& nu_;
    std::vector<int> used_;
    std::vector<std::vector<int>> grid_;
    std::vector<Cell> order_;
    std::vector<SkewTableau> found_;
};

}  // namespace

std::vector<SkewTableau> lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!contains(nu, lambda) || nu.size() != lambda.size() + mu.size()) return {};
    return LrFiller(lambda, mu, nu).run();
}

long lr_coefficient_schur(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return static_cast<long>(lr_tableaux(lambda, mu, nu).size());
}

bool GTPattern::interlaces() const {
    for (std::size_t j = 0; j + 1 < rows.size(); ++j) {
        if (rows[j].size() != j + 1 || rows[j + 1].size() != j + 2) return false;
        for (std::size_t k = 0; k <= j; ++k)
            if (!(rows[j + 1][k] >= rows[j][k] && rows[j][k] >= rows[j + 1][k + 1])) return false;
    }
    return true;
}

GTPattern lr_to_gt(const SkewTableau& T) {
    if (!is_lattice_word(reading_word(T))) throw NotLatticeWord("reading word is not a lattice word");
    const int n = static_cast<int>(T.rows.size());
    GTPattern g;
    std::vector<int> count(static_cast<std::size_t>(n + 1), 0);
    for (int j = 1; j <= n; ++j) {
        for (int v : T.rows[static_cast<std::size_t>(j - 1)]) {
            if (v > n) throw NotLatticeWord("entry exceeds the number of rows");
            ++count[static_cast<std::size_t>(v)];
        }
        g.rows.emplace_back(count.begin() + 1, count.begin() + 1 + j);
    }
    return g;
}

Tableau gt_to_tableau(const GTPattern& g) {
    if (g.rows.empty()) return {};
    const auto& top = g.rows.back();
    std::vector<std::vector<int>> rows(top.size());
    for (std::size_t j = 0; j < g.rows.size(); ++j)
        for (std::size_t k = 0; k < g.rows[j].size(); ++k) {
            int prev = (j > 0 && k < g.rows[j - 1].size()) ? g.rows[j - 1][k] : 0;
            rows[k].insert(rows[k].end(), static_cast<std::size_t>(g.rows[j][k] - prev), static_cast<int>(j + 1));
        }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return Tableau::from_rows(rows);
}

}  // namespace mlr
