#include "curvlab/builtin.hpp"

#include "curvlab/encoding.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace curvlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::string strip_word_prefix(const std::string& text) {
    auto t = trim(text);
    if (t.rfind("w:", 0) == 0) t = trim(t.substr(2));
    return t;
}

}  // namespace

// ---------------------------------------------------------------- Z^n

AbelianGroup::AbelianGroup(int rank) : rank_(rank) {
    if (rank < 1) throw DomainError("Z^n needs n >= 1");
    for (int i = 0; i < rank; ++i) {
        Element up(static_cast<std::size_t>(rank), 0);
        Element down(static_cast<std::size_t>(rank), 0);
        up[static_cast<std::size_t>(i)] = 1;
        down[static_cast<std::size_t>(i)] = -1;
        const auto name = "a" + std::to_string(i + 1);
        gens_.add_pair(name, up, name + "^-1", down);
    }
}

AbelianGroup::Element AbelianGroup::compose(const Element& x, const Element& y) const {
    Element out(x);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
    return out;
}

AbelianGroup::Element AbelianGroup::invert(const Element& x) const {
    Element out(x);
    for (auto& c : out) c = -c;
    return out;
}

Key AbelianGroup::encode(const Element& x) const {
    Key key;
    for (auto c : x) encoding::put_i64(key, c);
    return key;
}

AbelianGroup::Element AbelianGroup::decode(const Key& key) const {
    encoding::Reader in(key);
    Element x(static_cast<std::size_t>(rank_));
    for (auto& c : x) c = in.i64();
    return x;
}

std::optional<int> AbelianGroup::closed_length(const Element& x) const {
    std::int64_t total = 0;
    for (auto c : x) total += c < 0 ? -c : c;
    return static_cast<int>(total);
}

std::string AbelianGroup::format(const Element& x) const {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(x[i]);
    }
    return out + ")";
}

AbelianGroup::Element AbelianGroup::parse(const std::string& text) const {
    const auto t = trim(text);
    if (t.rfind("w:", 0) == 0) return evaluate(*this, parse_word(*this, t.substr(2)));
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw ParseError(text, "Z^n literal \"(c1,...,cn)\"");
    Element x;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const auto value = std::stoll(trim(item), &used);
            if (used != trim(item).size()) throw ParseError(item, "integer coordinate");
            x.push_back(value);
        } catch (const std::logic_error&) {
            throw ParseError(item, "integer coordinate");
        }
    }
    if (static_cast<int>(x.size()) != rank_)
        throw ParseError(text, "exactly " + std::to_string(rank_) + " coordinates");
    return x;
}

// ---------------------------------------------------------------- F_n

FreeGroup::FreeGroup(int rank) : rank_(rank) {
    if (rank < 1 || rank > 26) throw DomainError("F_n needs 1 <= n <= 26");
    for (int i = 0; i < rank; ++i) {
        const std::string name(1, static_cast<char>('a' + i));
        gens_.add_pair(name, Element{2 * i}, name + "^-1", Element{2 * i + 1});
    }
}

FreeGroup::Element FreeGroup::compose(const Element& x, const Element& y) const {
    Element out(x);
    for (int letter : y) {
        if (!out.empty() && out.back() == (letter ^ 1))
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

FreeGroup::Element FreeGroup::invert(const Element& x) const {
    Element out(x.rbegin(), x.rend());
    for (int& letter : out) letter ^= 1;
    return out;
}

Key FreeGroup::encode(const Element& x) const {
    Key key;
    key.reserve(x.size());
    for (int letter : x) key.push_back(static_cast<char>(letter + 1));
    return key;
}

FreeGroup::Element FreeGroup::decode(const Key& key) const {
    Element x;
    x.reserve(key.size());
    for (char c : key) x.push_back(static_cast<int>(static_cast<unsigned char>(c)) - 1);
    return x;
}

std::string FreeGroup::format(const Element& x) const { return format_word(*this, x); }

FreeGroup::Element FreeGroup::parse(const std::string& text) const {
    return evaluate(*this, parse_word(*this, strip_word_prefix(text)));
}

bool FreeGroup::is_cyclically_reduced(const Element& x) const {
    return x.size() < 2 || x.front() != (x.back() ^ 1);
}

Rational free_gencon(int rank, const FreeGroup::Element& g) {
    if (g.empty()) throw IdentityElement();
    const FreeGroup group(rank);
    if (!group.is_cyclically_reduced(g))
        throw DomainError("the closed form |g| + 2 - 2/n needs a cyclically reduced word");
    return Rational(static_cast<long long>(g.size()) + 2) - make_rational(2, rank);
}

// ---------------------------------------------------------------- finite

FiniteGroup::FiniteGroup(std::string id, std::vector<std::vector<int>> table, std::vector<GeneratorSpec> generators)
    : id_(std::move(id)), table_(std::move(table)) {
    const auto n = table_.size();
    if (n == 0) throw DomainError("empty multiplication table");
    for (const auto& row : table_)
        if (row.size() != n) throw DomainError("multiplication table is not square");
    if (!is_latin_square()) throw DomainError("multiplication table is not a Latin square");

    identity_ = -1;
    for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            ok = table_[e][x] == static_cast<int>(x) && table_[x][e] == static_cast<int>(x);
        if (ok) identity_ = static_cast<int>(e);
    }
    if (identity_ < 0) throw DomainError("multiplication table has no identity");
    inverse_.assign(n, -1);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (table_[x][y] == identity_) inverse_[x] = static_cast<int>(y);

    std::vector<bool> placed(generators.size(), false);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (placed[i]) continue;
        const int x = generators[i].element;
        if (invert(x) == x) {
            gens_.add_involution(generators[i].name, x);
            placed[i] = true;
            continue;
        }
        std::size_t partner = generators.size();
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (!placed[j] && generators[j].element == invert(x)) partner = j;
        if (partner == generators.size()) throw DomainError("generator " + generators[i].name + " lacks an inverse");
        gens_.add_pair(generators[i].name, x, generators[partner].name, generators[partner].element);
        placed[i] = placed[partner] = true;
    }

    // Shortlex normal forms by BFS; generators are tried in index order.
    normal_forms_.assign(n, Word{});
    std::vector<bool> seen(n, false);
    std::deque<int> queue{identity_};
    seen[static_cast<std::size_t>(identity_)] = true;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            const int y = compose(x, gens_[g].element);
            if (seen[static_cast<std::size_t>(y)]) continue;
            seen[static_cast<std::size_t>(y)] = true;
            normal_forms_[static_cast<std::size_t>(y)] = normal_forms_[static_cast<std::size_t>(x)];
            normal_forms_[static_cast<std::size_t>(y)].push_back(static_cast<int>(g));
            queue.push_back(y);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw DomainError("generators do not generate the group");
}

bool FiniteGroup::is_latin_square() const {
    const auto n = table_.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> row(n, false), col(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            const auto r = table_[i][j];
            const auto c = table_[j][i];
            if (r < 0 || static_cast<std::size_t>(r) >= n || row[static_cast<std::size_t>(r)]) return false;
            if (c < 0 || static_cast<std::size_t>(c) >= n || col[static_cast<std::size_t>(c)]) return false;
            row[static_cast<std::size_t>(r)] = col[static_cast<std::size_t>(c)] = true;
        }
    }
    return true;
}

Key FiniteGroup::encode(Element x) const {
    Key key;
    encoding::put_i64(key, x);
    return key;
}

FiniteGroup::Element FiniteGroup::decode(const Key& key) const {
    encoding::Reader in(key);
    return static_cast<Element>(in.i64());
}

std::string FiniteGroup::format(Element x) const { return format_word(*this, normal_form(x)); }

FiniteGroup::Element FiniteGroup::parse(const std::string& text) const {
    return evaluate(*this, parse_word(*this, strip_word_prefix(text)));
}

FiniteGroup make_s3() {
    // Permutations of {0,1,2} in lexicographic order; product x*y applies y first.
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (std::size_t x = 0; x < 6; ++x)
        for (std::size_t y = 0; y < 6; ++y) {
            std::vector<int> q(3);
            for (std::size_t i = 0; i < 3; ++i) q[i] = perms[x][static_cast<std::size_t>(perms[y][i])];
            table[x][y] = index_of(q);
        }
    const int s = index_of({1, 0, 2});
    const int t = index_of({0, 2, 1});
    return FiniteGroup("S3", std::move(table), {{"s", s}, {"t", t}});
}

}  // namespace curvlab
