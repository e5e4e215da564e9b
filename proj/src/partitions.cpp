#include "mlr/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace mlr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidPartition("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidPartition("partition parts must weakly decrease");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int n) const {
    std::vector<int> p = parts_;
    if (static_cast<int>(p.size()) < n) p.resize(static_cast<std::size_t>(n), 0);
    return p;
}

std::string Partition::to_string() const { return composition_to_string(parts_); }

Partition conjugate(const Partition& lambda) {
    std::vector<int> c(static_cast<std::size_t>(lambda[1]), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

ArmLeg arm_leg(const Partition& lambda, Cell s) {
    if (!lambda.contains(s.row, s.col)) throw CellOutsideShape("cell (" + std::to_string(s.row) + "," +
                                                               std::to_string(s.col) + ") outside shape");
    int leg = 0;
    while (lambda[s.row + leg + 1] >= s.col) ++leg;
    return {lambda[s.row] - s.col, leg};
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

bool dominance_leq(const Partition& rho, const Partition& chi) {
    if (rho.size() != chi.size()) throw SizeMismatch("dominance requires equal sizes");
    int n = std::max(rho.length(), chi.length());
    int sr = 0, sc = 0;
    for (int i = 1; i <= n; ++i) {
        sr += rho[i];
        sc += chi[i];
        if (sc < sr) return false;
    }
    return true;
}

bool is_vertical_strip(const Partition& lambda, const Partition& nu) {
    if (!contains(nu, lambda)) return false;
    for (int i = 1; i <= nu.length(); ++i)
        if (nu[i] - lambda[i] > 1) return false;
    return true;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& nu) {
    if (!contains(nu, lambda)) return false;
    // interlacing nu_{i+1} <= lambda_i
    for (int i = 1; i < nu.length(); ++i)
        if (nu[i + 1] > lambda[i]) return false;
    return true;
}

StripType strip_type(const Partition& lambda, const Partition& nu) {
    if (!contains(nu, lambda)) return StripType::not_contained;
    bool v = is_vertical_strip(lambda, nu), h = is_horizontal_strip(lambda, nu);
    if (v && h) return StripType::both;
    if (v) return StripType::vertical;
    if (h) return StripType::horizontal;
    return StripType::neither;
}

const char* to_string(StripType s) {
    switch (s) {
        case StripType::not_contained: return "not_contained";
        case StripType::vertical: return "vertical";
        case StripType::horizontal: return "horizontal";
        case StripType::both: return "both";
        case StripType::neither: return "neither";
    }
    return "";
}

std::vector<Cell> skew_cells(const Partition& lambda, const Partition& nu) {
    std::vector<Cell> out;
    for (int i = 1; i <= nu.length(); ++i)
        for (int j = lambda[i] + 1; j <= nu[i]; ++j) out.push_back({i, j});
    return out;
}

std::vector<Cell> cells(const Partition& lambda) { return skew_cells(Partition(), lambda); }

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (parts_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, parts_left - 1, cur, out);
        cur.pop_back();
    }
}

void compositions_rec(int remaining, int k, std::vector<int>& cur, std::vector<Composition>& out) {
    if (static_cast<int>(cur.size()) == k - 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        cur.push_back(v);
        compositions_rec(remaining - v, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, max_part < 0 ? n : max_part, max_parts < 0 ? n : max_parts, cur, out);
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    for (int n = 0; n <= rows * cols; ++n)
        for (auto& p : partitions_of(n, rows, cols)) out.push_back(std::move(p));
    return out;
}

std::vector<Composition> compositions_of(int n, int k) {
    std::vector<Composition> out;
    if (k <= 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    compositions_rec(n, k, cur, out);
    return out;
}

Composition parse_composition(const std::string& text) {
    Composition out;
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')') s.push_back(c);
    if (s.empty()) return out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
            throw ParseError("expected comma-separated nonnegative integers, got \"" + text + "\"");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    Composition c = parse_composition(text);
    try {
        return Partition(c);
    } catch (const InvalidPartition&) {
        throw ParseError("not a partition: \"" + text + "\"");
    }
}

std::string composition_to_string(const Composition& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    return os.str();
}

Composition difference(const Partition& nu, const Partition& lambda, int n) {
    Composition d(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) d[static_cast<std::size_t>(i - 1)] = nu[i] - lambda[i];
    return d;
}

bool sum_is_partition(const Partition& lambda, const Composition& chi) {
    int n = std::max<int>(lambda.length(), static_cast<int>(chi.size()));
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        int c = i <= static_cast<int>(chi.size()) ? chi[static_cast<std::size_t>(i - 1)] : 0;
        int v = lambda[i] + c;
        if (c < 0 || (i > 1 && v > prev)) return false;
        prev = v;
    }
    return true;
}

Partition add(const Partition& lambda, const Composition& chi) {
    int n = std::max<int>(lambda.length(), static_cast<int>(chi.size()));
    std::vector<int> v = lambda.padded(n);
    for (std::size_t i = 0; i < chi.size(); ++i) v[i] += chi[i];
    return Partition(std::move(v));
}

}  // namespace mlr
