#include "svf/roots.hpp"

#include "svf/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace svf {

namespace {

char family_letter(Family f)
{
    return "ABCDEFG"[static_cast<int>(f)];
}

bool rank_allowed(Family f, int n)
{
    switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 3;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
    }
    return false;
}

int parse_int(std::string_view text, const char* what)
{
    int value = 0;
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw InvalidInput(std::string("malformed ") + what + " '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

// (alpha_i, alpha_i)/2 inside one simple factor, Bourbaki numbering.
std::vector<int> factor_symmetrizer(const SimpleFactor& f)
{
    std::vector<int> d(static_cast<std::size_t>(f.rank), 1);
    const auto n = static_cast<std::size_t>(f.rank);
    switch (f.family) {
    case Family::B:
        for (std::size_t i = 0; i + 1 < n; ++i) d[i] = 2;
        break;
    case Family::C:
        d[n - 1] = 2;
        break;
    case Family::F:
        d[0] = d[1] = 2;
        break;
    case Family::G:
        d[1] = 3;
        break;
    default:
        break;
    }
    return d;
}

std::vector<std::pair<int, int>> factor_edges(const SimpleFactor& f)
{
    std::vector<std::pair<int, int>> edges;
    const int n = f.rank;
    switch (f.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        break;
    case Family::D:
        for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 3, n - 1);
        break;
    case Family::E:
        edges.emplace_back(0, 2);
        edges.emplace_back(1, 3);
        for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        break;
    }
    return edges;
}

std::uint64_t factorial(int n)
{
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t factor_weyl_order(const SimpleFactor& f)
{
    const int n = f.rank;
    switch (f.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
    }
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// SemisimpleType

SemisimpleType::SemisimpleType(std::vector<SimpleFactor> factors) : factors_(std::move(factors))
{
    if (factors_.empty()) throw InvalidInput("semisimple type needs at least one factor");
    for (const auto& f : factors_) {
        if (!rank_allowed(f.family, f.rank))
            throw InvalidInput(std::string("invalid simple type ") + family_letter(f.family) +
                               std::to_string(f.rank));
    }
}

SemisimpleType SemisimpleType::parse(std::string_view text)
{
    std::vector<SimpleFactor> factors;
    for (auto part : split(text, 'x')) {
        if (part.size() < 2) throw InvalidInput("malformed type '" + std::string(text) + "'");
        const char c = part.front();
        if (c < 'A' || c > 'G') throw InvalidInput("unknown family in '" + std::string(text) + "'");
        factors.push_back({static_cast<Family>(c - 'A'), parse_int(part.substr(1), "rank")});
    }
    return SemisimpleType(std::move(factors));
}

int SemisimpleType::rank() const
{
    int r = 0;
    for (const auto& f : factors_) r += f.rank;
    return r;
}

std::string SemisimpleType::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += 'x';
        out += family_letter(factors_[i].family);
        out += std::to_string(factors_[i].rank);
    }
    return out;
}

IndexSet all_indices(int rank)
{
    IndexSet s(static_cast<std::size_t>(rank));
    std::iota(s.begin(), s.end(), 0);
    return s;
}

// ---------------------------------------------------------------------------
// Weight

Weight Weight::parse(std::string_view text)
{
    std::vector<int> coords;
    for (auto part : split(text, ',')) coords.push_back(parse_int(part, "weight coordinate"));
    return Weight(std::move(coords));
}

bool Weight::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

Weight Weight::operator+(const Weight& o) const
{
    Weight r = *this;
    r += o;
    return r;
}

Weight Weight::operator-(const Weight& o) const
{
    Weight r = *this;
    r -= o;
    return r;
}

Weight Weight::operator-() const
{
    Weight r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

Weight Weight::operator*(int k) const
{
    Weight r = *this;
    for (auto& c : r.coords_) c *= k;
    return r;
}

Weight& Weight::operator+=(const Weight& o)
{
    if (o.rank() != rank()) throw InvalidInput("weight rank mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o)
{
    if (o.rank() != rank()) throw InvalidInput("weight rank mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

std::string Weight::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords_[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(SemisimpleType type) : type_(std::move(type)), rank_(type_.rank())
{
    const auto n = static_cast<std::size_t>(rank_);
    cartan_.assign(n * n, 0);
    symmetrizer_.clear();
    factor_of_.clear();

    int offset = 0;
    int factor = 0;
    for (const auto& f : type_.factors()) {
        const auto d = factor_symmetrizer(f);
        symmetrizer_.insert(symmetrizer_.end(), d.begin(), d.end());
        factor_of_.insert(factor_of_.end(), d.size(), factor);
        for (int i = 0; i < f.rank; ++i) cartan_[static_cast<std::size_t>((offset + i) * rank_ + offset + i)] = 2;
        for (auto [i, j] : factor_edges(f)) {
            const int bij = -std::max(d[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(j)]);
            cartan_[static_cast<std::size_t>((offset + i) * rank_ + offset + j)] = bij / d[static_cast<std::size_t>(j)];
            cartan_[static_cast<std::size_t>((offset + j) * rank_ + offset + i)] = bij / d[static_cast<std::size_t>(i)];
        }
        offset += f.rank;
        ++factor;
    }

    for (int i = 0; i < rank_; ++i) {
        std::vector<int> row(n);
        for (int j = 0; j < rank_; ++j) row[static_cast<std::size_t>(j)] = cartan(i, j);
        simple_roots_.emplace_back(std::move(row));
    }

    Matrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = cartan(static_cast<int>(i), static_cast<int>(j));
    inverse_cartan_ = inverse(c);

    weight_form_ = Matrix(n, n);
    Integer den = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            weight_form_(i, j) = inverse_cartan_(i, j) * symmetrizer_[j];
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), weight_form_(i, j).get_den_mpz_t());
        }
    }
    form_den_ = den.get_si();
    form_num_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = weight_form_(i, j) * den;
            form_num_[i * n + j] = scaled.get_num().get_si();
        }
    }

    // Positive roots by additive closure, height by height. For a root beta
    // and simple alpha_i the alpha_i-string through beta is beta - p a .. beta + q a
    // with p - q = <beta, h_i>; beta + alpha_i is a root iff q > 0.
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> layer;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        known.insert(e);
        layer.push_back(e);
    }
    std::vector<std::vector<int>> all = layer;
    while (!layer.empty()) {
        std::set<std::vector<int>> next;
        for (const auto& beta : layer) {
            Weight bw = Weight::zero(rank_);
            for (std::size_t k = 0; k < n; ++k) bw += simple_roots_[k] * beta[k];
            for (std::size_t i = 0; i < n; ++i) {
                int p = 0;
                auto down = beta;
                while (down[i] > 0) {
                    --down[i];
                    if (!known.count(down)) break;
                    ++p;
                }
                const int q = p - bw[static_cast<int>(i)];
                if (q > 0) {
                    auto up = beta;
                    ++up[i];
                    if (!known.count(up)) next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        for (const auto& r : layer) {
            known.insert(r);
            all.push_back(r);
        }
    }

    for (const auto& k : all) {
        Root r;
        r.simple_coords = k;
        r.weight = Weight::zero(rank_);
        for (std::size_t j = 0; j < n; ++j) r.weight += simple_roots_[j] * k[j];
        r.height = std::accumulate(k.begin(), k.end(), 0);
        r.factor = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (k[j]) r.factor = factor_of_[j];
        positive_roots_.push_back(std::move(r));
    }
    std::sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.simple_coords > b.simple_coords;
    });
}

RootSystemPtr build_root_system(const SemisimpleType& type)
{
    return RootSystemPtr(new RootSystem(type));
}

Rational RootSystem::inner_product(const Weight& a, const Weight& b) const
{
    Rational q(scaled_inner_product(a, b), form_den_);
    q.canonicalize();
    return q;
}

std::int64_t RootSystem::scaled_inner_product(const Weight& a, const Weight& b) const
{
    if (a.rank() != rank_ || b.rank() != rank_) throw InvalidInput("weight rank does not match root system");
    std::int64_t acc = 0;
    const auto n = static_cast<std::size_t>(rank_);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[static_cast<int>(i)] == 0) continue;
        std::int64_t row = 0;
        for (std::size_t j = 0; j < n; ++j) row += form_num_[i * n + j] * b[static_cast<int>(j)];
        acc += a[static_cast<int>(i)] * row;
    }
    return acc;
}

RationalVector RootSystem::to_root_coords(const Weight& w) const
{
    const auto n = static_cast<std::size_t>(rank_);
    RationalVector out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (w[static_cast<int>(i)] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) out[k] += inverse_cartan_(i, k) * w[static_cast<int>(i)];
    }
    return out;
}

std::optional<std::size_t> RootSystem::positive_root_index(const Weight& w) const
{
    for (std::size_t i = 0; i < positive_roots_.size(); ++i)
        if (positive_roots_[i].weight == w) return i;
    return std::nullopt;
}

bool RootSystem::is_root(const Weight& w) const
{
    return positive_root_index(w).has_value() || positive_root_index(-w).has_value();
}

int RootSystem::pairing(const Weight& lambda, const Weight& alpha) const
{
    if (lambda.rank() != rank_ || alpha.rank() != rank_) throw InvalidInput("weight rank does not match root system");
    if (!is_root(alpha)) throw InvalidInput("pairing: " + alpha.to_string() + " is not a root");
    const auto num = 2 * scaled_inner_product(lambda, alpha);
    const auto den = scaled_inner_product(alpha, alpha);
    if (num % den != 0) throw InvariantViolation("pairing with a root must be integral");
    return static_cast<int>(num / den);
}

bool RootSystem::in_span(const Root& r, const IndexSet& levi)
{
    for (std::size_t j = 0; j < r.simple_coords.size(); ++j) {
        if (r.simple_coords[j] != 0 && !std::binary_search(levi.begin(), levi.end(), static_cast<int>(j)))
            return false;
    }
    return true;
}

IndexSet RootSystem::factor_indices(int factor) const
{
    if (factor < 0 || factor >= factor_count()) throw InvalidInput("factor index out of range");
    IndexSet s;
    for (int i = 0; i < rank_; ++i)
        if (factor_of(i) == factor) s.push_back(i);
    return s;
}

Weight RootSystem::reflect(const Weight& w, int i) const
{
    const int c = w[i];
    if (c == 0) return w;
    return w - simple_roots_[static_cast<std::size_t>(i)] * c;
}

Weight RootSystem::rho() const
{
    return Weight(std::vector<int>(static_cast<std::size_t>(rank_), 1));
}

std::uint64_t RootSystem::weyl_group_order() const
{
    std::uint64_t order = 1;
    for (const auto& f : type_.factors()) order *= factor_weyl_order(f);
    return order;
}

// ---------------------------------------------------------------------------

bool is_dominant(const Weight& w, const IndexSet& s)
{
    return std::all_of(s.begin(), s.end(), [&](int i) { return w[i] >= 0; });
}

bool is_dominant(const Weight& w)
{
    return std::all_of(w.coords().begin(), w.coords().end(), [](int c) { return c >= 0; });
}

std::set<Weight> weyl_orbit(const Weight& w, const RootSystem& rs)
{
    return weyl_orbit(w, rs, all_indices(rs.rank()));
}

std::set<Weight> weyl_orbit(const Weight& w, const RootSystem& rs, const IndexSet& s)
{
    std::set<Weight> orbit{w};
    std::vector<Weight> frontier{w};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& x : frontier) {
            for (int i : s) {
                auto y = rs.reflect(x, i);
                if (orbit.insert(y).second) next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    return orbit;
}

Weight dominant_representative(const Weight& w, const RootSystem& rs, const IndexSet& s)
{
    Weight x = w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : s) {
            if (x[i] < 0) {
                x = rs.reflect(x, i);
                moved = true;
            }
        }
    }
    return x;
}

std::vector<int> longest_element_word(const RootSystem& rs, const IndexSet& s)
{
    // Drive an s-regular dominant vector to the antidominant chamber; each step
    // lowers the length by one so the recorded word is reduced and has
    // maximal length.
    Weight v = Weight::zero(rs.rank());
    std::vector<int> coords(static_cast<std::size_t>(rs.rank()), 0);
    for (int i : s) coords[static_cast<std::size_t>(i)] = 1;
    v = Weight(coords);
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : s) {
            if (v[i] > 0) {
                v = rs.reflect(v, i);
                word.push_back(i);
                moved = true;
                break;
            }
        }
    }
    return word;
}

Weight longest_element_image(const Weight& w, const IndexSet& s, const RootSystem& rs)
{
    Weight x = w;
    for (int i : longest_element_word(rs, s)) x = rs.reflect(x, i);
    return x;
}

Weight highest_root(const RootSystem& rs, int factor)
{
    if (factor < 0 || factor >= rs.factor_count()) throw InvalidInput("factor index out of range");
    const Root* best = nullptr;
    for (const auto& r : rs.positive_roots()) {
        if (r.factor == factor && (!best || r.height > best->height)) best = &r;
    }
    return best->weight;
}

IndexSet parse_index_set(std::string_view text, int rank)
{
    IndexSet s;
    if (text.empty()) throw InvalidInput("empty simple-root index list (use \"none\")");
    if (text == "none") return s;
    if (text == "all") return all_indices(rank);
    for (auto part : split(text, ',')) {
        const int i = parse_int(part, "simple-root index");
        if (i < 1 || i > rank)
            throw InvalidInput("simple-root index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
        s.push_back(i - 1);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InvalidInput("repeated simple-root index");
    return s;
}

std::string index_set_to_string(const IndexSet& s)
{
    if (s.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i] + 1);
    }
    return out;
}

}  // namespace svf
