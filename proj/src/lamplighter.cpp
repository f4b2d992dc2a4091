#include "curvlab/lamplighter.hpp"

#include "curvlab/encoding.hpp"

#include <algorithm>
#include <cstdlib>
#include <regex>
#include <sstream>

namespace curvlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& text, const std::string& rule) {
    const auto t = trim(text);
    try {
        std::size_t used = 0;
        const auto v = std::stoll(t, &used);
        if (used != t.size()) throw ParseError(text, rule);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError(text, rule);
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

FiniteGroupSpec FiniteGroupSpec::cyclic(int n) {
    if (n < 2) throw DomainError("lamp group Z_n needs n >= 2");
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (x + y) % n;
    return from_table("Z" + std::to_string(n), std::move(table));
}

FiniteGroupSpec FiniteGroupSpec::from_table(std::string name, std::vector<std::vector<int>> table) {
    FiniteGroupSpec spec;
    spec.name = std::move(name);
    spec.table = std::move(table);
    const auto n = spec.table.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (spec.table[i].size() != n) throw DomainError("lamp group table is not square");
        std::vector<bool> row(n, false), col(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            const auto r = static_cast<std::size_t>(spec.table[i][j]);
            const auto c = static_cast<std::size_t>(spec.table[j][i]);
            if (r >= n || c >= n || row[r] || col[c]) throw DomainError("lamp group table is not a Latin square");
            row[r] = col[c] = true;
        }
    }
    spec.identity = -1;
    for (std::size_t e = 0; e < n && spec.identity < 0; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            ok = spec.table[e][x] == static_cast<int>(x) && spec.table[x][e] == static_cast<int>(x);
        if (ok) spec.identity = static_cast<int>(e);
    }
    if (spec.identity < 0) throw DomainError("lamp group table has no identity");
    spec.inverse.assign(n, -1);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (spec.table[x][y] == spec.identity) spec.inverse[x] = static_cast<int>(y);
    return spec;
}

int ll_length(const LampConfig& cfg) {
    const auto n = static_cast<std::int64_t>(cfg.lamps.size());
    const std::int64_t m = cfg.pos;
    if (n == 0) return static_cast<int>(std::abs(m));
    const std::int64_t right = std::max<std::int64_t>(0, cfg.lamps.rbegin()->first);
    const std::int64_t left = std::max<std::int64_t>(0, -cfg.lamps.begin()->first);
    const auto left_first = 2 * left + right + std::abs(m - right);
    const auto right_first = 2 * right + left + std::abs(m + left);
    return static_cast<int>(n + std::min(left_first, right_first));
}

WreathGroup::WreathGroup(FiniteGroupSpec lamps) : spec_(std::move(lamps)) {
    const int n = spec_.order();
    if (n < 2) throw DomainError("lamp group must be nontrivial");
    const bool is_z2 = n == 2;
    const bool is_cyclic = spec_.name.size() > 1 && spec_.name[0] == 'Z';
    id_ = is_z2 ? "L2" : (is_cyclic ? "W" + spec_.name.substr(1) : "W[" + spec_.name + "]");

    auto state_name = [&](int x) {
        if (is_z2) return std::string("a");
        return "s" + std::to_string(x);
    };
    toggle_index_.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        if (x == spec_.identity || toggle_index_[static_cast<std::size_t>(x)] >= 0) continue;
        const int inv = spec_.inverse[static_cast<std::size_t>(x)];
        LampConfig gx{{{0, x}}, 0};
        if (inv == x) {
            toggle_index_[static_cast<std::size_t>(x)] = gens_.add_involution(state_name(x), gx);
        } else {
            LampConfig gi{{{0, inv}}, 0};
            const int index = gens_.add_pair(state_name(x), gx, state_name(inv), gi);
            toggle_index_[static_cast<std::size_t>(x)] = index;
            toggle_index_[static_cast<std::size_t>(inv)] = index + 1;
        }
    }
    t_ = gens_.add_pair("t", LampConfig{{}, 1}, "t^-1", LampConfig{{}, -1});
}

int WreathGroup::toggle(int state) const {
    if (state < 0 || state >= spec_.order() || state == spec_.identity)
        throw DomainError("lamp state must be a non-identity element of the lamp group");
    return toggle_index_[static_cast<std::size_t>(state)];
}

WreathGroup::Element WreathGroup::compose(const Element& x, const Element& y) const {
    Element out = x;
    for (const auto& [index, state] : y.lamps) {
        const auto target = index + x.pos;
        auto it = out.lamps.find(target);
        const int current = it == out.lamps.end() ? spec_.identity : it->second;
        const int next = spec_.mul(current, state);
        if (next == spec_.identity) {
            if (it != out.lamps.end()) out.lamps.erase(it);
        } else if (it == out.lamps.end()) {
            out.lamps.emplace(target, next);
        } else {
            it->second = next;
        }
    }
    out.pos = x.pos + y.pos;
    return out;
}

WreathGroup::Element WreathGroup::invert(const Element& x) const {
    // (f, m)^-1 = (i -> f(i + m)^-1, -m)
    Element out;
    out.pos = -x.pos;
    for (const auto& [index, state] : x.lamps) out.lamps.emplace(index - x.pos, spec_.inverse[static_cast<std::size_t>(state)]);
    return out;
}

Key WreathGroup::encode(const Element& x) const {
    Key key;
    encoding::put_i64(key, x.pos);
    for (const auto& [index, state] : x.lamps) {
        encoding::put_i64(key, index);
        encoding::put_i64(key, state);
    }
    return key;
}

WreathGroup::Element WreathGroup::decode(const Key& key) const {
    encoding::Reader in(key);
    Element x;
    x.pos = in.i64();
    while (!in.done()) {
        const auto index = in.i64();
        x.lamps.emplace(index, static_cast<int>(in.i64()));
    }
    return x;
}

std::string WreathGroup::format(const Element& x) const {
    std::string out = id_ + "{ ";
    bool first = true;
    for (const auto& [index, state] : x.lamps) {
        if (!first) out += spec_.order() == 2 ? "," : ", ";
        first = false;
        out += std::to_string(index);
        if (spec_.order() != 2) out += ":" + std::to_string(state);
    }
    out += (x.lamps.empty() ? "; p=" : " ; p=") + std::to_string(x.pos) + " }";
    return out;
}

WreathGroup::Element WreathGroup::parse(const std::string& text) const {
    const auto t = trim(text);
    if (t.rfind("w:", 0) == 0) return evaluate(*this, parse_word(*this, t.substr(2)));

    static const std::regex dm_re(R"(d\(\s*(\d+)\s*\)(\s*\*\s*t\^\s*(-?\d+))?)");
    std::smatch match;
    if (std::regex_match(t, match, dm_re)) {
        const int m = static_cast<int>(parse_int(match[1].str(), "d(m) with m >= 1"));
        if (m < 1) throw ParseError(t, "d(m) with m >= 1");
        std::vector<int> states(static_cast<std::size_t>(2 * m + 1), 1);
        auto x = wr_make_dm(spec_, m, states);
        if (match[3].matched) x.pos = parse_int(match[3].str(), "integer exponent");
        return x;
    }

    const auto open = t.find('{');
    if (open == std::string::npos || t.back() != '}' || trim(t.substr(0, open)) != id_)
        throw ParseError(t, id_ + "{ lamps ; p=<int> }, d(m), d(m)*t^k or w: <word>");
    const auto body = t.substr(open + 1, t.size() - open - 2);
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw ParseError(t, "';' separating lamps from p=<int>");
    Element x;
    const auto tail = trim(body.substr(semi + 1));
    if (tail.rfind("p=", 0) != 0) throw ParseError(tail, "p=<int>");
    x.pos = parse_int(tail.substr(2), "p=<int>");
    const auto lamp_text = trim(body.substr(0, semi));
    if (!lamp_text.empty()) {
        for (const auto& item : split(lamp_text, ',')) {
            const auto colon = item.find(':');
            std::int64_t index = 0;
            int state = 1;
            if (colon == std::string::npos) {
                if (spec_.order() != 2) throw ParseError(item, "index:state pair");
                index = parse_int(item, "lamp index");
            } else {
                index = parse_int(item.substr(0, colon), "lamp index");
                state = static_cast<int>(parse_int(item.substr(colon + 1), "lamp state"));
            }
            if (state < 0 || state >= spec_.order()) throw ParseError(item, "lamp state in the lamp group");
            if (state == spec_.identity) throw ParseError(item, "non-identity lamp state");
            if (!x.lamps.emplace(index, state).second) throw ParseError(item, "each lamp index at most once");
        }
    }
    return x;
}

WreathGroup make_lamplighter() { return WreathGroup(FiniteGroupSpec::cyclic(2)); }
WreathGroup make_cyclic_wreath(int n) { return WreathGroup(FiniteGroupSpec::cyclic(n)); }

Word ll_geodesic(const WreathGroup& group, const LampConfig& cfg) {
    Word word;
    std::int64_t here = 0;
    std::map<std::int64_t, bool> lit;
    // Each lamp is set on the first pass over its index.
    auto light_here = [&] {
        auto it = cfg.lamps.find(here);
        if (it != cfg.lamps.end() && !lit[here]) {
            word.push_back(group.toggle(it->second));
            lit[here] = true;
        }
    };
    auto walk = [&](std::int64_t target) {
        light_here();
        while (here != target) {
            word.push_back(target > here ? group.t() : group.t_inverse());
            here += target > here ? 1 : -1;
            light_here();
        }
    };
    const std::int64_t right = cfg.lamps.empty() ? 0 : std::max<std::int64_t>(0, cfg.lamps.rbegin()->first);
    const std::int64_t left = cfg.lamps.empty() ? 0 : std::min<std::int64_t>(0, cfg.lamps.begin()->first);
    if (cfg.pos >= 0) {
        walk(left);
        walk(right);
    } else {
        walk(right);
        walk(left);
    }
    walk(cfg.pos);
    return word;
}

LampConfig ll_make_dm(int m) {
    if (m < 1) throw DomainError("d_m needs m >= 1");
    LampConfig x;
    for (int i = -m; i <= m; ++i) x.lamps.emplace(i, 1);
    return x;
}

LampConfig wr_make_dm(const FiniteGroupSpec& lamps, int m, const std::vector<int>& states) {
    if (m < 1) throw DomainError("d_m needs m >= 1");
    if (states.size() != static_cast<std::size_t>(2 * m + 1)) throw DomainError("d_m needs 2m+1 lamp states");
    LampConfig x;
    for (int i = -m; i <= m; ++i) {
        const int state = states[static_cast<std::size_t>(i + m)];
        if (state < 0 || state >= lamps.order() || state == lamps.identity)
            throw DomainError("d_m lamp states must be non-identity");
        x.lamps.emplace(i, state);
    }
    return x;
}

namespace {

std::int64_t lamp_reach(const LampConfig& w) {
    std::int64_t reach = std::max<std::int64_t>(1, std::abs(w.pos));
    for (const auto& [index, state] : w.lamps) reach = std::max(reach, std::abs(index));
    return reach;
}

// Signed steps o from the final position to the nearest unlit lamp inside
// [-m, m], trying +o before -o; nullopt when every lamp there is lit.
std::optional<std::int64_t> parking_offset(const LampConfig& w, std::int64_t m) {
    for (std::int64_t o = 1; o <= 2 * m; ++o) {
        for (std::int64_t step : {o, -o}) {
            const auto q = w.pos + step;
            if (q >= -m && q <= m && !w.lamps.count(q)) return step;
        }
    }
    return std::nullopt;
}

void append_t_power(const WreathGroup& group, Word& word, std::int64_t k) {
    const int letter = k >= 0 ? group.t() : group.t_inverse();
    for (std::int64_t i = 0; i < std::abs(k); ++i) word.push_back(letter);
}

}  // namespace

Word ll_dead_end_completion(const WreathGroup& group, const LampConfig& w, int m) {
    if (group.lamp_group().order() != 2) throw DomainError("dead-end completion is implemented for L_2");
    const auto reach = lamp_reach(w);
    if (m < reach)
        throw DomainError("d_m with m = " + std::to_string(m) + " cannot contain the element; need m >= " +
                          std::to_string(reach));
    const int a = group.toggle(1);
    auto lit = w.lamps;
    Word out;
    std::int64_t offset = 0;
    if (lit.count(w.pos)) {
        // Lit position: step to the nearest dark lamp first (if any remain).
        offset = parking_offset(w, m).value_or(0);
        append_t_power(group, out, offset);
        if (offset != 0) {
            out.push_back(a);
            lit.emplace(w.pos + offset, 1);
        }
    } else {
        out.push_back(a);
        lit.emplace(w.pos, 1);
    }
    append_t_power(group, out, -(w.pos + offset));
    for (std::int64_t q = -m; q <= m; ++q) {
        if (lit.count(q)) continue;
        append_t_power(group, out, q);
        out.push_back(a);
        append_t_power(group, out, -q);
    }
    return out;
}

DeadEndEmbedding ll_embed_in_dead_end(const WreathGroup& group, const LampConfig& w) {
    if (group.lamp_group().order() != 2) throw DomainError("dead-end embedding is implemented for L_2");
    DeadEndEmbedding out;
    out.branch = w.lamps.count(w.pos) ? DeadEndEmbedding::Branch::PositionLit : DeadEndEmbedding::Branch::PositionUnlit;
    out.m = static_cast<int>(lamp_reach(w));
    out.completion = ll_dead_end_completion(group, w, out.m);

    const int w_length = ll_length(w);
    const auto w_inv = group.invert(w);
    for (int m = 1; m <= 2 * out.m + 2; ++m) {
        const auto dm = ll_make_dm(m);
        const auto rest = group.compose(w_inv, dm);
        if (w_length + ll_length(rest) == ll_length(dm)) {
            out.geodesic_m = m;
            out.extension = ll_geodesic(group, rest);
            break;
        }
    }
    return out;
}

}  // namespace curvlab
