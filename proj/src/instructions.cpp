#include "anet/instructions.hpp"

#include <algorithm>
#include <map>

namespace anet {

std::uint32_t changed_coordinates(const Network& f)
{
    const Params& p = f.params;
    std::uint32_t mask = 0;
    for (Config x = 0; x < p.size; ++x) {
        const Config y = f.table[x];
        if (y == x) continue;
        for (int v = 1; v <= p.n; ++v)
            if (p.digit(x, v) != p.digit(y, v)) mask |= 1u << (v - 1);
    }
    return mask;
}

bool is_instruction(const Network& f, int v)
{
    f.params.check_coordinate(v);
    return (changed_coordinates(f) & ~(1u << (v - 1))) == 0;
}

Instruction Instruction::from_network(const Network& f)
{
    const std::uint32_t mask = changed_coordinates(f);
    if (mask != 0 && (mask & (mask - 1)) != 0)
        fail(errc::invalid_params, "network updates more than one coordinate; not an instruction");
    const int v = mask == 0 ? 1 : 1 + __builtin_ctz(mask);
    return Instruction{v, f};
}

Instruction Instruction::from_local_rule(const Params& p, int v, std::span<const int> new_digit)
{
    p.check_coordinate(v);
    if (new_digit.size() != p.size) fail(errc::invalid_params, "local rule must list one digit per configuration");
    Network net{p, std::vector<Config>(p.size)};
    for (Config x = 0; x < p.size; ++x) {
        const int d = new_digit[x];
        if (d < 0 || d >= p.q) fail(errc::invalid_digit, "local rule digit outside [0,q)");
        net.table[x] = p.with_digit(x, v, d);
    }
    return Instruction{v, std::move(net)};
}

int hamming_distance(Config x, Config y, const Params& p)
{
    int d = 0;
    for (int v = 1; v <= p.n; ++v)
        if (p.digit(x, v) != p.digit(y, v)) ++d;
    return d;
}

AssignmentInstruction AssignmentInstruction::make(const Params& p, Config a, Config b)
{
    if (hamming_distance(a, b, p) != 1) fail(errc::invalid_params, "assignment endpoints must differ in exactly one coordinate");
    return AssignmentInstruction{a, b};
}

int AssignmentInstruction::coordinate(const Params& p) const
{
    for (int v = 1; v <= p.n; ++v)
        if (p.digit(a, v) != p.digit(b, v)) return v;
    fail(errc::invalid_params, "degenerate assignment");
}

std::optional<CollisionWitness> in_S(const Network& f)
{
    const Params& p = f.params;
    for (Config x = 0; x < p.size; ++x) {
        for (int v = 1; v <= p.n; ++v) {
            const int d = p.digit(x, v);
            const Config pv = p.place(v);
            for (int e = d + 1; e < p.q; ++e) {
                const Config y = x + static_cast<Config>(e - d) * pv;
                if (f.table[x] == f.table[y]) return CollisionWitness{x, y, v};
            }
        }
    }
    return std::nullopt;
}

Network replay(const std::vector<Instruction>& prog, const Params& p)
{
    Network r = Network::identity(p);
    for (const Instruction& ins : prog) r = compose(ins.net, r);
    return r;
}

Network replay(const std::vector<AssignmentInstruction>& prog, const Params& p)
{
    Network r = Network::identity(p);
    for (const AssignmentInstruction& a : prog) {
        // Left-composing an assignment only rewrites matching images.
        for (Config x = 0; x < p.size; ++x)
            if (r.table[x] == a.a) r.table[x] = a.b;
    }
    return r;
}

namespace {

// Hamming path from x to y, changing coordinates in ascending order.
std::vector<Config> hamming_path(Config x, Config y, const Params& p)
{
    std::vector<Config> path{x};
    Config cur = x;
    for (int v = 1; v <= p.n; ++v) {
        const int d = p.digit(y, v);
        if (p.digit(cur, v) != d) {
            cur = p.with_digit(cur, v, d);
            path.push_back(cur);
        }
    }
    return path;
}

Instruction adjacent_transposition(const Params& p, Config a, Config b)
{
    return Instruction::from_network(Network::transposition(p, a, b));
}

Instruction adjacent_assignment(const Params& p, Config a, Config b)
{
    return Instruction::from_network(Network::assignment(p, a, b));
}

// (u <-> w) as adjacent transpositions along a Hamming path (palindrome form).
void emit_routed_transposition(std::vector<Instruction>& out, Config u, Config w, const Params& p)
{
    const auto path = hamming_path(u, w, p);
    const std::size_t k = path.size() - 1;
    if (k == 0) return;
    for (std::size_t i = 0; i + 1 < k; ++i) out.push_back(adjacent_transposition(p, path[i], path[i + 1]));
    out.push_back(adjacent_transposition(p, path[k - 1], path[k]));
    for (std::size_t i = k - 1; i-- > 0;) out.push_back(adjacent_transposition(p, path[i], path[i + 1]));
}

// (u -> w) exactly: conjugate one adjacent assignment by the transposition
// chain that walks u next to w.
void emit_routed_collapse(std::vector<Instruction>& out, Config u, Config w, const Params& p)
{
    const auto path = hamming_path(u, w, p);
    const std::size_t k = path.size() - 1;
    if (k == 0) return;
    if (k == 1) {
        out.push_back(adjacent_assignment(p, u, w));
        return;
    }
    for (std::size_t i = 0; i + 1 < k; ++i) out.push_back(adjacent_transposition(p, path[i], path[i + 1]));
    out.push_back(adjacent_assignment(p, path[k - 1], path[k]));
    for (std::size_t i = k - 1; i-- > 0;) out.push_back(adjacent_transposition(p, path[i], path[i + 1]));
}

} // namespace

std::vector<Instruction> decompose_singular(const Network& f)
{
    const Params& p = f.params;
    const auto witness = in_S(f);
    if (!witness) fail(errc::decomposition_unavailable, "network has no Hamming-1 collision; not in S(n,q)");
    const Config wa = witness->a, wb = witness->b;

    // Kernel classes of f.
    std::map<Config, std::vector<Config>> classes;
    for (Config x = 0; x < p.size; ++x) classes[f.table[x]].push_back(x);

    // Collapse each class onto a representative, the witness class first and
    // led by the direct adjacent assignment (wa -> wb); the rest of the
    // factorization may then use permutation instructions freely, since the
    // running prefix is singular from the very first factor.
    std::vector<Instruction> factors;
    std::vector<std::pair<Config, Config>> collapse; // (x, rep), applied in order
    {
        auto& wc = classes[f.table[wa]];
        collapse.emplace_back(wa, wb);
        for (Config x : wc)
            if (x != wa && x != wb) collapse.emplace_back(x, wb);
    }
    for (const auto& [img, members] : classes) {
        if (img == f.table[wa]) continue;
        if (members.size() < 2) continue;
        const Config rep = members.front(); // members ascending
        for (std::size_t i = 1; i < members.size(); ++i) collapse.emplace_back(members[i], rep);
    }
    factors.push_back(adjacent_assignment(p, wa, wb));
    for (std::size_t i = 1; i < collapse.size(); ++i) emit_routed_collapse(factors, collapse[i].first, collapse[i].second, p);

    // Permutation part: map every representative to its class image, extended
    // to a bijection by matching leftovers in ascending order.
    std::vector<Config> perm(p.size);
    std::vector<bool> dom_used(p.size, false), img_used(p.size, false);
    for (const auto& [img, members] : classes) {
        const Config rep = (img == f.table[wa]) ? wb : members.front();
        perm[rep] = img;
        dom_used[rep] = true;
        img_used[img] = true;
    }
    {
        std::vector<Config> free_img;
        for (Config y = 0; y < p.size; ++y)
            if (!img_used[y]) free_img.push_back(y);
        std::size_t j = 0;
        for (Config x = 0; x < p.size; ++x)
            if (!dom_used[x]) perm[x] = free_img[j++];
    }
    // Cycle decomposition into (routed) transpositions, applied after the collapses.
    {
        std::vector<bool> seen(p.size, false);
        for (Config s = 0; s < p.size; ++s) {
            if (seen[s] || perm[s] == s) continue;
            std::vector<Config> cycle;
            Config c = s;
            while (!seen[c]) {
                seen[c] = true;
                cycle.push_back(c);
                c = perm[c];
            }
            for (std::size_t j = 1; j < cycle.size(); ++j) emit_routed_transposition(factors, cycle[0], cycle[j], p);
        }
    }

    // Convert every permutation instruction into a singular one that agrees
    // with it on the image of the running prefix: redirect the prefix orphan.
    std::vector<Instruction> out;
    out.reserve(factors.size());
    Network prefix = factors.front().net;
    out.push_back(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) {
        Instruction ins = factors[i];
        if (!ins.is_singular()) {
            const auto orp = orphans(prefix);
            if (orp.empty()) fail(errc::decomposition_unavailable, "internal: prefix lost its orphan");
            const Config z = orp.front();
            const int u = ins.v;
            const int redirected = (p.digit(ins.net.table[z], u) + 1) % p.q;
            ins.net.table[z] = p.with_digit(z, u, redirected);
        }
        prefix = compose(factors[i].net, prefix); // replay the original factor
        out.push_back(std::move(ins));
    }

    if (!(replay(out, p) == f)) fail(errc::decomposition_unavailable, "internal: singular decomposition replay mismatch");
    return out;
}

namespace {

// Deterministic factorization of a singular transformation of [q] into
// assignments of [q]: collapse kernel classes onto representatives, then sort
// the surviving value tokens into place through the free cells.
std::vector<std::pair<int, int>> fiber_singular_assignments(const std::vector<int>& tau, int q)
{
    std::vector<std::pair<int, int>> out;
    std::map<int, std::vector<int>> classes;
    for (int t = 0; t < q; ++t) classes[tau[t]].push_back(t);

    std::vector<int> target(static_cast<std::size_t>(q), -1); // location -> desired final location
    std::vector<bool> occupied(static_cast<std::size_t>(q), false);
    for (const auto& [img, members] : classes) {
        int rep = members.front();
        for (int m : members)
            if (m == img) rep = m; // keep the image point when the class holds it
        for (int m : members)
            if (m != rep) out.emplace_back(m, rep);
        occupied[static_cast<std::size_t>(rep)] = true;
        target[static_cast<std::size_t>(rep)] = img;
    }

    // Token sort: distinct targets, at least one free cell (tau is singular).
    while (true) {
        int misplaced = -1;
        for (int s = 0; s < q; ++s)
            if (occupied[static_cast<std::size_t>(s)] && target[static_cast<std::size_t>(s)] != s) {
                misplaced = s;
                break;
            }
        if (misplaced < 0) break;
        bool moved = false;
        for (int s = misplaced; s < q; ++s) {
            if (!occupied[static_cast<std::size_t>(s)] || target[static_cast<std::size_t>(s)] == s) continue;
            const int t = target[static_cast<std::size_t>(s)];
            if (!occupied[static_cast<std::size_t>(t)]) {
                out.emplace_back(s, t);
                occupied[static_cast<std::size_t>(s)] = false;
                occupied[static_cast<std::size_t>(t)] = true;
                target[static_cast<std::size_t>(t)] = t;
                target[static_cast<std::size_t>(s)] = -1;
                moved = true;
            }
        }
        if (!moved) {
            // Every misplaced token sits on a cycle; park one on a free cell.
            int free_cell = -1;
            for (int c = 0; c < q; ++c)
                if (!occupied[static_cast<std::size_t>(c)]) {
                    free_cell = c;
                    break;
                }
            out.emplace_back(misplaced, free_cell);
            occupied[static_cast<std::size_t>(misplaced)] = false;
            occupied[static_cast<std::size_t>(free_cell)] = true;
            target[static_cast<std::size_t>(free_cell)] = target[static_cast<std::size_t>(misplaced)];
            target[static_cast<std::size_t>(misplaced)] = -1;
        }
    }
    return out;
}

// Bracket [a,b,w,x] = (a -> b) o (w <-> x) expanded into assignments, for
// w, x in a common fiber distinct from the fiber of a. Emitted in application
// order (rightmost factor of the printed formula first).
void emit_bracket(std::vector<AssignmentInstruction>& out, Config a, Config b, Config w, Config x, int v, const Params& p)
{
    const int wv = p.digit(w, v), xv = p.digit(x, v), bv = p.digit(b, v);
    int zdig = -1;
    for (int d = 0; d < p.q; ++d)
        if (d != wv && d != xv) {
            zdig = d;
            break;
        }
    if (zdig < 0) fail(errc::invalid_params, "bracket expansion needs q >= 3");
    (void)bv;
    const Config z = p.with_digit(w, v, zdig);

    // Path a = z^0, z^1, ..., z^n = z, changing coordinate v first so no
    // intermediate point can hit w or x.
    std::vector<Config> zs{a};
    Config cur = a;
    if (p.digit(cur, v) != zdig) {
        cur = p.with_digit(cur, v, zdig);
        zs.push_back(cur);
    }
    for (int c = 1; c <= p.n; ++c) {
        if (c == v) continue;
        const int d = p.digit(z, c);
        if (p.digit(cur, c) != d) {
            cur = p.with_digit(cur, c, d);
            zs.push_back(cur);
        }
    }

    const auto push = [&](Config from, Config to) { out.push_back(AssignmentInstruction::make(p, from, to)); };
    push(a, b);
    for (std::size_t i = 1; i < zs.size(); ++i) push(zs[i], zs[i - 1]); // ascending chain toward a
    push(w, z);
    push(x, w);
    push(z, x);
    for (std::size_t i = zs.size() - 1; i >= 1; --i) push(zs[i - 1], zs[i]); // restore the chain
}

} // namespace

std::vector<AssignmentInstruction> decompose_into_assignments(const Instruction& ins)
{
    const Params& p = ins.net.params;
    if (p.q < 3) fail(errc::invalid_params, "assignment generation requires q >= 3 (parity obstruction at q = 2)");
    const int v = ins.v;
    if (!is_instruction(ins.net, v)) fail(errc::invalid_params, "not a single-coordinate instruction");

    const Config pv = p.place(v);
    const auto fiber_base = [&](Config x) { return x - static_cast<Config>(p.digit(x, v)) * pv; };

    // First collision pair inside a fiber: ins(a) = ins(b), a, b adjacent at v.
    Config a = 0, b = 0;
    bool found = false;
    for (Config base = 0; base < p.size && !found; ++base) {
        if (p.digit(base, v) != 0) continue;
        for (int t1 = 0; t1 < p.q && !found; ++t1)
            for (int t2 = t1 + 1; t2 < p.q && !found; ++t2) {
                const Config c1 = base + static_cast<Config>(t1) * pv;
                const Config c2 = base + static_cast<Config>(t2) * pv;
                if (ins.net.table[c1] == ins.net.table[c2]) {
                    a = c1;
                    b = c2;
                    found = true;
                }
            }
    }
    if (!found) fail(errc::decomposition_unavailable, "instruction is not singular");

    // g := ins with g(a) = a, split into per-fiber transformations of [q].
    Network g = ins.net;
    g.table[a] = a;
    const Config a_base = fiber_base(a);

    std::vector<AssignmentInstruction> brackets, singular_parts, a_part;
    bool any_bracket = false;
    for (Config base = 0; base < p.size; ++base) {
        if (p.digit(base, v) != 0) continue;
        std::vector<int> phi(static_cast<std::size_t>(p.q));
        for (int t = 0; t < p.q; ++t) phi[static_cast<std::size_t>(t)] = p.digit(g.table[base + static_cast<Config>(t) * pv], v);

        const auto lift = [&](const std::vector<std::pair<int, int>>& moves, std::vector<AssignmentInstruction>& dst) {
            for (auto [from, to] : moves)
                dst.push_back(AssignmentInstruction::make(p, base + static_cast<Config>(from) * pv, base + static_cast<Config>(to) * pv));
        };

        if (base == a_base) {
            // tau = phi o (a_v -> b_v): singular by construction.
            std::vector<int> tau = phi;
            tau[static_cast<std::size_t>(p.digit(a, v))] = phi[static_cast<std::size_t>(p.digit(b, v))];
            lift(fiber_singular_assignments(tau, p.q), a_part);
            continue;
        }
        bool identity = true, bijective = true;
        std::vector<bool> hit(static_cast<std::size_t>(p.q), false);
        for (int t = 0; t < p.q; ++t) {
            if (phi[static_cast<std::size_t>(t)] != t) identity = false;
            if (hit[static_cast<std::size_t>(phi[static_cast<std::size_t>(t)])]) bijective = false;
            hit[static_cast<std::size_t>(phi[static_cast<std::size_t>(t)])] = true;
        }
        if (identity) continue;
        if (!bijective) {
            lift(fiber_singular_assignments(phi, p.q), singular_parts);
            continue;
        }
        // Permutation fiber: cycles -> transpositions -> brackets, each bracket
        // carrying one idempotent copy of (a -> b).
        any_bracket = true;
        std::vector<bool> seen(static_cast<std::size_t>(p.q), false);
        for (int s = 0; s < p.q; ++s) {
            if (seen[static_cast<std::size_t>(s)] || phi[static_cast<std::size_t>(s)] == s) continue;
            std::vector<int> cycle;
            int c = s;
            while (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = true;
                cycle.push_back(c);
                c = phi[static_cast<std::size_t>(c)];
            }
            for (std::size_t j = 1; j < cycle.size(); ++j)
                emit_bracket(brackets, a, b, base + static_cast<Config>(cycle[0]) * pv,
                             base + static_cast<Config>(cycle[j]) * pv, v, p);
        }
    }

    // The a-fiber token part already realizes phi_a o (a_v -> b_v), and in
    // the bracket case the residual (a -> b) is absorbed by idempotence, so
    // no standalone leading assignment is needed.
    std::vector<AssignmentInstruction> out;
    (void)any_bracket;
    out.insert(out.end(), brackets.begin(), brackets.end());
    out.insert(out.end(), singular_parts.begin(), singular_parts.end());
    out.insert(out.end(), a_part.begin(), a_part.end());

    if (!(replay(out, p) == ins.net)) fail(errc::decomposition_unavailable, "internal: assignment decomposition replay mismatch");
    return out;
}

ParityReport assignment_parity_obstruction(const Network& f)
{
    const Params& p = f.params;
    if (p.q != 2) fail(errc::invalid_params, "parity obstruction analysis is specific to q = 2");
    ParityReport rep;
    if (is_bijective(f)) {
        rep.note = "bijective map; assignment products are never bijective";
        return rep;
    }
    const int m = static_cast<int>(p.size);
    if (rank(f) != m - 1) {
        rep.note = "rank below 2^n - 1; invariant stated for corank 1 only";
        return rep;
    }
    const auto orp = orphans(f);
    const Config o = orp.front();
    // The unique kernel pair.
    std::vector<std::int64_t> pre(p.size, -1);
    Config ka = 0, kb = 0;
    for (Config x = 0; x < p.size; ++x) {
        const Config y = f.table[x];
        if (pre[y] >= 0) {
            ka = static_cast<Config>(pre[y]);
            kb = x;
        }
        pre[y] = x;
    }
    const int dist = hamming_distance(ka, kb, p);
    if (dist != 1) {
        rep.note = "kernel pair not Hamming-adjacent; map is outside S(n,2)";
        return rep;
    }
    rep.collision = CollisionWitness{ka, kb, [&] {
                                         for (int v = 1; v <= p.n; ++v)
                                             if (p.digit(ka, v) != p.digit(kb, v)) return v;
                                         return 1;
                                     }()};
    rep.orphan = o;

    // Hole-extended permutation: x -> f(x) off ka, and ka -> orphan.
    std::vector<Config> sigma(p.size);
    for (Config x = 0; x < p.size; ++x) sigma[x] = (x == ka) ? o : f.table[x];
    bool odd = false;
    {
        std::vector<bool> seen(p.size, false);
        for (Config s = 0; s < p.size; ++s) {
            if (seen[s]) continue;
            int len = 0;
            Config c = s;
            while (!seen[c]) {
                seen[c] = true;
                c = sigma[c];
                ++len;
            }
            if (len % 2 == 0) odd = !odd;
        }
    }
    rep.permutation_odd = odd;
    rep.hole_displacement = hamming_distance(ka, o, p);
    // A slide sequence of k moves gives permutation sign (-1)^k and walks the
    // hole k edges; on the bipartite cube both parities must agree with
    // d_H(kernel source, orphan).
    const bool blocked = odd != (rep.hole_displacement % 2 == 1);
    rep.verdict = blocked ? ParityVerdict::ParityBlocked : ParityVerdict::Generable;
    rep.note = blocked ? "permutation parity inconsistent with hole displacement on the bipartite cube"
                       : "parity invariant satisfied";
    return rep;
}

std::vector<Network> all_singular_instructions(const Params& p)
{
    std::vector<Network> out;
    std::uint64_t rules = 1;
    for (Config i = 0; i < p.size; ++i) {
        rules *= static_cast<std::uint64_t>(p.q);
        if (rules > (std::uint64_t{1} << 26)) fail(errc::limit_exceeded, "too many local rules to enumerate");
    }
    std::vector<int> rule(p.size, 0);
    for (int v = 1; v <= p.n; ++v) {
        std::fill(rule.begin(), rule.end(), 0);
        for (std::uint64_t r = 0; r < rules; ++r) {
            Instruction ins = Instruction::from_local_rule(p, v, rule);
            if (ins.is_singular()) out.push_back(std::move(ins.net));
            // Increment the rule as a little-endian base-q counter.
            for (Config i = 0; i < p.size; ++i) {
                if (++rule[i] < p.q) break;
                rule[i] = 0;
            }
        }
    }
    return out;
}

std::vector<Network> all_assignment_instructions(const Params& p)
{
    std::vector<Network> out;
    for (Config x = 0; x < p.size; ++x)
        for (int v = 1; v <= p.n; ++v) {
            const int d = p.digit(x, v);
            for (int e = 0; e < p.q; ++e) {
                if (e == d) continue;
                out.push_back(Network::assignment(p, x, p.with_digit(x, v, e)));
            }
        }
    return out;
}

std::vector<Network> all_instructions(const Params& p)
{
    std::vector<Network> out;
    std::uint64_t rules = 1;
    for (Config i = 0; i < p.size; ++i) {
        rules *= static_cast<std::uint64_t>(p.q);
        if (rules > (std::uint64_t{1} << 26)) fail(errc::limit_exceeded, "too many local rules to enumerate");
    }
    std::vector<int> rule(p.size, 0);
    for (int v = 1; v <= p.n; ++v) {
        std::fill(rule.begin(), rule.end(), 0);
        for (std::uint64_t r = 0; r < rules; ++r) {
            out.push_back(Instruction::from_local_rule(p, v, rule).net);
            for (Config i = 0; i < p.size; ++i) {
                if (++rule[i] < p.q) break;
                rule[i] = 0;
            }
        }
    }
    return out;
}

} // namespace anet
