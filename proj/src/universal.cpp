#include "anet/universal.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "anet/dense.hpp"

namespace anet::universal {

int control_index(int y1, int y2, int y3) { return y1 + 2 * y2 + 4 * y3; }

int control_index(const std::string& bits)
{
    if (bits.size() != 3) fail(errc::invalid_params, "control state needs exactly 3 bits");
    return control_index(bits[0] - '0', bits[1] - '0', bits[2] - '0');
}

std::string control_bits(int state)
{
    std::string s(3, '0');
    for (int i = 0; i < 3; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>('0' + ((state >> i) & 1));
    return s;
}

ControlAutomaton rho()
{
    // Transcribed arc by arc; the loop at 101 covers coordinates 1 and 3,
    // consistent with the synchronizing-word trace table.
    ControlAutomaton a;
    a.next[static_cast<std::size_t>(control_index("000"))] = control_index("100");
    a.next[static_cast<std::size_t>(control_index("100"))] = control_index("011");
    a.next[static_cast<std::size_t>(control_index("010"))] = control_index("000");
    a.next[static_cast<std::size_t>(control_index("110"))] = control_index("010");
    a.next[static_cast<std::size_t>(control_index("001"))] = control_index("000");
    a.next[static_cast<std::size_t>(control_index("101"))] = control_index("111");
    a.next[static_cast<std::size_t>(control_index("011"))] = control_index("001");
    a.next[static_cast<std::size_t>(control_index("111"))] = control_index("010");
    return a;
}

namespace {

// Digit-component update of the factor construction.
int psi_factor(std::span<const int> x, int y, int i, int n, int q)
{
    const int y101 = control_index(1, 0, 1);
    const int y011 = control_index(0, 1, 1);
    const int y001 = control_index(0, 0, 1);
    const int y111 = control_index(1, 1, 1);

    const auto all_zero_below = [&](int k) {
        for (int j = 0; j < k; ++j)
            if (x[static_cast<std::size_t>(j)] != 0) return false;
        return true;
    };
    const auto is_e1 = [&] { // 1 0^(n-1)
        if (x[0] != 1) return false;
        for (int j = 1; j < n; ++j)
            if (x[static_cast<std::size_t>(j)] != 0) return false;
        return true;
    };

    const int xi = x[static_cast<std::size_t>(i - 1)];
    switch (i) {
    case 1:
        if (y == y101) return (xi + 1) % q;
        if ((y == y011 || y == y001) && all_zero_below(n)) return 1;
        if (y == y011 && is_e1()) return 0;
        return xi;
    case 2:
        if (y == y111 && x[0] == 0) return (xi + 1) % q;
        return xi;
    case 3:
        if (y == y011 && x[0] == 0 && x[1] == 0) return (xi + 1) % q;
        return xi;
    default:
        if (all_zero_below(i - 1)) return (xi + 1) % q;
        return xi;
    }
}

} // namespace

Network factor_network(int n, int q)
{
    if (n < 3) fail(errc::invalid_params, "factor construction needs n >= 3");
    if (q < 2) fail(errc::invalid_params, "q must be >= 2");
    const Params big = Params::make(n, 2 * q);
    const ControlAutomaton r = rho();

    Network f{big, std::vector<Config>(big.size)};
    std::vector<int> x(static_cast<std::size_t>(n)), yb(static_cast<std::size_t>(n));
    for (Config s = 0; s < big.size; ++s) {
        for (int v = 1; v <= n; ++v) {
            const int sym = big.digit(s, v);
            x[static_cast<std::size_t>(v - 1)] = sym % q;
            yb[static_cast<std::size_t>(v - 1)] = sym / q;
        }
        const int y = control_index(yb[0], yb[1], yb[2]);
        const int ry = r.next[static_cast<std::size_t>(y)];
        Config img = 0;
        for (int v = 1; v <= n; ++v) {
            const int digit = psi_factor(x, y, v, n, q);
            const int bit = v <= 3 ? ((ry >> (v - 1)) & 1) : yb[static_cast<std::size_t>(v - 1)];
            img += static_cast<Config>(digit + q * bit) * big.place(v);
        }
        f.table[s] = img;
    }
    return f;
}

UpdateWord sync_word(int n, int q)
{
    const Params big = Params::make(n, 2 * q);
    std::vector<int> coords(static_cast<std::size_t>(q), 3);
    for (int c : {2, 3, 1, 1, 2, 1, 3}) coords.push_back(c);
    return UpdateWord::sequential(coords, big);
}

GadgetWords gadget_words(int n, int q)
{
    const Params big = Params::make(n, 2 * q);
    GadgetWords g;
    std::vector<int> c{1, 2, 2, 1};
    for (int v = 3; v <= n; ++v) c.push_back(v);
    g.c = UpdateWord::sequential(c, big);
    g.k = UpdateWord::sequential({2, 1, 1}, big);
    g.d = UpdateWord::sequential({2, 1, 2, 1}, big);
    return g;
}

Network counter_network(const Params& p)
{
    Network f{p, std::vector<Config>(p.size)};
    for (Config x = 0; x < p.size; ++x) f.table[x] = (x + 1) % p.size;
    return f;
}

Network swap01_network(const Params& p) { return Network::transposition(p, 0, 1); }

Network assign01_network(const Params& p) { return Network::assignment(p, 0, 1); }

Config project_factor(Config s, const Params& big, const Params& small)
{
    Config x = 0;
    for (int v = 1; v <= small.n; ++v) x += static_cast<Config>(big.digit(s, v) % small.q) * small.place(v);
    return x;
}

Config embed(Config x, const Params& small, const Params& big)
{
    Config s = 0;
    for (int v = 1; v <= small.n; ++v) s += static_cast<Config>(small.digit(x, v)) * big.place(v);
    return s;
}

std::optional<std::vector<int>> decompose_over(const Network& h, const std::vector<Network>& gens,
                                               std::uint64_t member_limit)
{
    const Params& p = h.params;
    if (h == Network::identity(p)) return std::vector<int>{};

    if (dense::Space::usable(p)) {
        std::vector<dense::Table> tabs;
        for (const Network& g : gens) tabs.push_back(dense::from_network(g));
        const dense::Space sp = dense::Space::make(p);
        const dense::Code target = dense::pack(dense::from_network(h), sp);
        // Early-exit BFS with witness back-pointers.
        std::vector<std::int32_t> id_of(sp.codes, -1);
        std::vector<dense::Code> members;
        std::vector<std::pair<std::int32_t, std::int32_t>> parent;
        const auto insert = [&](dense::Table t, std::int32_t par, std::int32_t gi) -> bool {
            const dense::Code c = dense::pack(t, sp);
            if (id_of[c] >= 0) return false;
            if (members.size() >= member_limit) fail(errc::limit_exceeded, "decomposition search exceeded member limit");
            id_of[c] = static_cast<std::int32_t>(members.size());
            members.push_back(c);
            parent.emplace_back(par, gi);
            return c == target;
        };
        bool found = false;
        for (std::size_t gi = 0; gi < tabs.size() && !found; ++gi) found = insert(tabs[gi], -1, static_cast<std::int32_t>(gi));
        for (std::size_t mi = 0; mi < members.size() && !found; ++mi) {
            const dense::Table mt = dense::unpack(members[mi], sp);
            for (std::size_t gi = 0; gi < tabs.size(); ++gi) {
                if (insert(dense::compose(tabs[gi], mt, sp.m), static_cast<std::int32_t>(mi), static_cast<std::int32_t>(gi))) {
                    found = true;
                    break;
                }
            }
        }
        if (!found) return std::nullopt;
        std::vector<int> word;
        std::int32_t id = id_of[target];
        while (id >= 0) {
            word.push_back(parent[static_cast<std::size_t>(id)].second);
            id = parent[static_cast<std::size_t>(id)].first;
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    // Hashed BFS for larger spaces.
    struct Hash {
        std::size_t operator()(const std::vector<Config>& t) const
        {
            std::uint64_t h = 1469598103934665603ull;
            for (Config c : t) {
                h ^= c;
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h);
        }
    };
    std::unordered_map<std::vector<Config>, std::uint32_t, Hash> id_of;
    std::vector<const std::vector<Config>*> members;
    std::vector<std::pair<std::int32_t, std::int32_t>> parent;
    const auto insert = [&](std::vector<Config> t, std::int32_t par, std::int32_t gi) -> bool {
        if (id_of.contains(t)) return false;
        if (members.size() >= member_limit) fail(errc::limit_exceeded, "decomposition search exceeded member limit");
        const bool hit = t == h.table;
        const auto [it, fresh] = id_of.emplace(std::move(t), static_cast<std::uint32_t>(members.size()));
        (void)fresh;
        members.push_back(&it->first);
        parent.emplace_back(par, gi);
        return hit;
    };
    bool found = false;
    for (std::size_t gi = 0; gi < gens.size() && !found; ++gi) found = insert(gens[gi].table, -1, static_cast<std::int32_t>(gi));
    for (std::size_t mi = 0; mi < members.size() && !found; ++mi) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const auto& g = gens[gi].table;
            const auto& m = *members[mi];
            std::vector<Config> t(m.size());
            for (std::size_t i = 0; i < m.size(); ++i) t[i] = g[m[i]];
            if (insert(std::move(t), static_cast<std::int32_t>(mi), static_cast<std::int32_t>(gi))) {
                found = true;
                break;
            }
        }
    }
    if (!found) return std::nullopt;
    std::vector<int> word;
    std::int32_t id = static_cast<std::int32_t>(id_of.at(h.table));
    while (id >= 0) {
        word.push_back(parent[static_cast<std::size_t>(id)].second);
        id = parent[static_cast<std::size_t>(id)].first;
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<int> decompose_ckd(const Network& h, std::uint64_t member_limit)
{
    const Params& p = h.params;
    const std::vector<Network> gens{counter_network(p), swap01_network(p), assign01_network(p)};
    const auto word = decompose_over(h, gens, member_limit);
    if (!word) fail(errc::decomposition_unavailable, "target not generated by {c,k,d}");
    return *word;
}

CompiledWord compile_factor(const Network& h, std::uint64_t member_limit)
{
    const Params& small = h.params;
    const int n = small.n, q = small.q;
    CompiledWord out;
    out.gadgets = decompose_ckd(h, member_limit);

    const UpdateWord sync = sync_word(n, q);
    const GadgetWords gw = gadget_words(n, q);
    out.word = sync; // the identity still needs the control pinned
    for (std::size_t i = 0; i < out.gadgets.size(); ++i) {
        if (i > 0) out.word.append(sync);
        switch (out.gadgets[i]) {
        case 0: out.word.append(gw.c); break;
        case 1: out.word.append(gw.k); break;
        case 2: out.word.append(gw.d); break;
        default: fail(errc::invalid_params, "unknown gadget id");
        }
    }
    const Network f = factor_network(n, q);
    if (!verify_factor(f, out.word, h)) fail(errc::decomposition_unavailable, "internal: compiled factor word failed replay");
    return out;
}

bool verify_factor(const Network& f, const UpdateWord& w, const Network& h)
{
    const Params& big = f.params;
    const Params& small = h.params;
    for (Config s = 0; s < big.size; ++s) {
        const Config lhs = project_factor(word_apply(f, w, s), big, small);
        const Config rhs = h.table[project_factor(s, big, small)];
        if (lhs != rhs) return false;
    }
    return true;
}

// --- initialization construction ------------------------------------------

bool in_Zplus(std::span<const int> block, int q)
{
    int extra = 0;
    for (int s : block)
        if (s == q) ++extra;
    return extra == 1;
}

bool in_Z(std::span<const int> block, int q)
{
    int extra = 0;
    for (int s : block)
        if (s == q) ++extra;
    return extra <= 1;
}

int lambda_of(std::span<const int> block, int q)
{
    for (int s : block)
        if (s >= q) return 1;
    return 0;
}

std::vector<int> mu_of(std::span<const int> block, int q)
{
    std::vector<int> x(block.begin(), block.end());
    if (!in_Z(block, q)) {
        for (int& s : x)
            if (s >= q) s = 0; // outside Z the value is arbitrary; pin it
        return x;
    }
    for (int j = 1; j <= q; ++j) {
        if (block[static_cast<std::size_t>(j - 1)] == q) {
            int sum = 0;
            for (int i = 1; i <= q; ++i)
                if (i != j) sum += block[static_cast<std::size_t>(i - 1)];
            x[static_cast<std::size_t>(j - 1)] = (((j - 1 - sum) % q) + q) % q;
            break;
        }
    }
    return x;
}

int boxplus_coord(std::span<const int> block, int j, int q)
{
    if (!in_Zplus(block, q)) {
        int sum = 0;
        for (int s : block) sum += s;
        if (((sum % q) + q) % q == j - 1) return q;
    }
    return block[static_cast<std::size_t>(j - 1)];
}

int boxminus_coord(std::span<const int> block, int j, int q)
{
    if (block[static_cast<std::size_t>(j - 1)] == q) {
        int sum = 0;
        for (int i = 1; i <= q; ++i)
            if (i != j) sum += block[static_cast<std::size_t>(i - 1)];
        return (((j - 1 - sum) % q) + q) % q;
    }
    return block[static_cast<std::size_t>(j - 1)];
}

std::vector<int> boxplus_full(std::span<const int> block, int q)
{
    std::vector<int> out(block.begin(), block.end());
    for (int j = 1; j <= q; ++j) out[static_cast<std::size_t>(j - 1)] = boxplus_coord(out, j, q);
    return out;
}

std::vector<int> boxminus_full(std::span<const int> block, int q)
{
    std::vector<int> out(block.begin(), block.end());
    for (int j = 1; j <= q; ++j) out[static_cast<std::size_t>(j - 1)] = boxminus_coord(out, j, q);
    return out;
}

namespace {

struct Arc {
    int block = 0; // 1..3, 0 = none
    bool plus = false;
};

// The six-cycle 000 ->2+ 010 ->3+ 011 ->2- 001 ->1+ 101 ->3- 100 ->1- 000.
Arc arc_for_control(int y)
{
    switch (y) {
    case 0: return {2, true};  // 000
    case 2: return {3, true};  // 010
    case 6: return {2, false}; // 011
    case 4: return {1, true};  // 001
    case 5: return {3, false}; // 101
    case 1: return {1, false}; // 100
    default: return {0, false};
    }
}

// Digit-component update of the initialization construction. Block
// coordinates act only in the control state where their block runs the
// counter (leaders carry the extra special cases); this is the reading fixed
// by the construction's own gadget traces.
int psi_init(std::span<const int> x, int y, int i, int n, int q)
{
    const int y010 = control_index(0, 1, 0);
    const int y011 = control_index(0, 1, 1);
    const int y100 = control_index(1, 0, 0);
    const int y101 = control_index(1, 0, 1);
    const int y000 = control_index(0, 0, 0);

    const auto carry = [&] {
        for (int j = 0; j < i - 1; ++j)
            if (x[static_cast<std::size_t>(j)] != 0) return false;
        return true;
    };
    const auto all_zero = [&] {
        for (int j = 0; j < n; ++j)
            if (x[static_cast<std::size_t>(j)] != 0) return false;
        return true;
    };
    const auto is_e1 = [&] {
        if (x[0] != 1) return false;
        for (int j = 1; j < n; ++j)
            if (x[static_cast<std::size_t>(j)] != 0) return false;
        return true;
    };

    const int xi = x[static_cast<std::size_t>(i - 1)];
    if (i == 1) {
        if (y == y010) return (xi + 1) % q;
        if (y == y011 && all_zero()) return 1;
        if (y == y011 && is_e1()) return 0;
        return xi;
    }
    if (i == q + 1) {
        if (y == y100 && carry()) return (xi + 1) % q;
        if (y == y101 && all_zero()) return 1;
        return xi;
    }
    if (i == 2 * q + 1) {
        if (y == y000 && carry()) return (xi + 1) % q;
        return xi;
    }
    if (i <= q) return (y == y010 && carry()) ? (xi + 1) % q : xi;
    if (i <= 2 * q) return (y == y100 && carry()) ? (xi + 1) % q : xi;
    if (i <= 3 * q) return (y == y000 && carry()) ? (xi + 1) % q : xi;
    return carry() ? (xi + 1) % q : xi; // plain counter tail on R
}

} // namespace

Network init_network(int n, int q)
{
    if (q < 2) fail(errc::invalid_params, "q must be >= 2");
    if (n < 3 * q) fail(errc::invalid_params, "initialization construction needs n >= 3q");
    const Params big = Params::make(n, q + 1);

    Network f{big, std::vector<Config>(big.size)};
    std::vector<int> digits(static_cast<std::size_t>(n));
    std::vector<int> x(static_cast<std::size_t>(n));
    std::array<std::vector<int>, 3> block;
    for (auto& b : block) b.resize(static_cast<std::size_t>(q));

    for (Config z = 0; z < big.size; ++z) {
        for (int v = 1; v <= n; ++v) digits[static_cast<std::size_t>(v - 1)] = big.digit(z, v);
        bool valid = true;
        int y = 0;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < q; ++j) block[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = digits[static_cast<std::size_t>(i * q + j)];
            y |= lambda_of(block[static_cast<std::size_t>(i)], q) << i;
            if (!in_Z(block[static_cast<std::size_t>(i)], q)) valid = false;
        }
        for (int v = 3 * q + 1; v <= n; ++v)
            if (digits[static_cast<std::size_t>(v - 1)] >= q) valid = false;
        if (valid) {
            for (int i = 0; i < 3; ++i) {
                const auto mu = mu_of(block[static_cast<std::size_t>(i)], q);
                for (int j = 0; j < q; ++j) x[static_cast<std::size_t>(i * q + j)] = mu[static_cast<std::size_t>(j)];
            }
            for (int v = 3 * q + 1; v <= n; ++v) x[static_cast<std::size_t>(v - 1)] = digits[static_cast<std::size_t>(v - 1)];
        }

        const Arc arc = arc_for_control(y);
        Config img = 0;
        for (int v = 1; v <= n; ++v) {
            int out;
            const int bi = (v - 1) / q; // 0-based block, valid when v <= 3q
            if (v <= 3 * q && arc.block == bi + 1) {
                const auto& blk = block[static_cast<std::size_t>(bi)];
                const int j = (v - 1) % q + 1;
                out = in_Z(blk, q) ? (arc.plus ? boxplus_coord(blk, j, q) : boxminus_coord(blk, j, q))
                                   : digits[static_cast<std::size_t>(v - 1)];
            } else if (!valid) {
                out = digits[static_cast<std::size_t>(v - 1)];
            } else {
                out = psi_init(x, y, v, n, q);
            }
            img += static_cast<Config>(out) * big.place(v);
        }
        f.table[z] = img;
    }
    return f;
}

InitGadgets init_gadgets(int n, int q)
{
    if (n < 3 * q) fail(errc::invalid_params, "initialization construction needs n >= 3q");
    const Params big = Params::make(n, q + 1);
    const auto tilde = [&](int i) {
        std::vector<int> coords;
        if (i <= 3)
            for (int j = 1; j <= q; ++j) coords.push_back((i - 1) * q + j);
        else
            for (int v = 3 * q + 1; v <= n; ++v) coords.push_back(v);
        return coords;
    };
    const auto seq = [&](std::initializer_list<int> blocks) {
        std::vector<int> coords;
        for (int b : blocks) {
            const auto t = tilde(b);
            coords.insert(coords.end(), t.begin(), t.end());
        }
        return UpdateWord::sequential(coords, big);
    };
    InitGadgets g;
    g.c = seq({2, 1, 3, 2, 1, 3, 2, 1, 3, 4});
    g.k = seq({2, 3, 1, 2, 1, 3, 1});
    g.d = seq({2, 3, 2, 1, 2, 3, 1});
    return g;
}

Network assign_block2_network(const Params& p, int q)
{
    if (p.n < q + 1) fail(errc::invalid_params, "target coordinate q+1 is out of range");
    return Network::assignment(p, 0, p.place(q + 1));
}

CompiledWord compile_init(const Network& h, std::uint64_t member_limit)
{
    const Params& small = h.params;
    const int n = small.n, q = small.q;
    if (n < 3 * q) fail(errc::invalid_params, "initialization construction needs n >= 3q");

    const std::vector<Network> gens{counter_network(small), swap01_network(small), assign_block2_network(small, q)};
    const auto word = decompose_over(h, gens, member_limit);
    if (!word) fail(errc::decomposition_unavailable, "target not generated by {c,k,d'}");

    CompiledWord out;
    out.gadgets = *word;
    const InitGadgets gw = init_gadgets(n, q);
    for (int g : out.gadgets) {
        switch (g) {
        case 0: out.word.append(gw.c); break;
        case 1: out.word.append(gw.k); break;
        case 2: out.word.append(gw.d); break;
        default: fail(errc::invalid_params, "unknown gadget id");
        }
    }
    const Network f = init_network(n, q);
    if (!verify_init(f, out.word, h)) fail(errc::decomposition_unavailable, "internal: compiled init word failed replay");
    return out;
}

bool verify_init(const Network& f, const UpdateWord& w, const Network& h)
{
    const Params& big = f.params;
    const Params& small = h.params;
    for (Config x = 0; x < small.size; ++x) {
        const Config z = embed(x, small, big);
        if (word_apply(f, w, z) != embed(h.table[x], small, big)) return false;
    }
    return true;
}

} // namespace anet::universal
