#include "planar3c/characteristic_dp.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace planar3c {

namespace {

int pow3(int e) {
    int r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

int stride_of(Mode mode, int s) { return mode == Mode::ECSS ? 1 << s : 4 * pow3(s); }

std::uint8_t cap3(int v) { return static_cast<std::uint8_t>(std::min(v, 3)); }

bool dead_values(Mode mode, const std::uint8_t* values, std::uint8_t internal, int s) {
    if (mode == Mode::ECSS) return internal < 3;
    // A labelling of S without B (or without A) can be completed on the
    // other side at no cost, so a small cut found here is final.
    const int count = pow3(s);
    for (int lab = 0; lab < count; ++lab) {
        int z = 0, seen = 0;
        for (int i = 0, t = lab; i < s; ++i, t /= 3) {
            z += t % 3 == 1;
            seen |= t % 3 == 0 ? 1 : t % 3 == 2 ? 2 : 0;
        }
        if (seen == 3) continue;
        if (values[4 * lab + 3] + z <= 2) return true;
    }
    return false;
}

struct Table {
    std::vector<VertexId> sep;
    int stride = 1;
    std::vector<std::uint8_t> data;
    std::vector<std::uint8_t> internal;
    std::vector<long> weight;
    std::vector<int> from_left, from_right;  // leaf: from_left = taken

    int size() const { return static_cast<int>(weight.size()); }
    const std::uint8_t* values(int i) const { return data.data() + static_cast<std::size_t>(i) * stride; }
};

// Deduplicating accumulator for the states of one table.
class TableBuilder {
public:
    explicit TableBuilder(Table& t) : t_(t) {}

    // Returns false when the state limit is exceeded.
    bool add(const std::uint8_t* values, std::uint8_t internal, long weight, int l, int r, long max_states) {
        key_.assign(reinterpret_cast<const char*>(values), t_.stride);
        key_.push_back(static_cast<char>(internal));
        auto [it, fresh] = index_.try_emplace(key_, t_.size());
        if (!fresh) {
            const int i = it->second;
            if (weight < t_.weight[i]) {
                t_.weight[i] = weight;
                t_.from_left[i] = l;
                t_.from_right[i] = r;
            }
            return true;
        }
        t_.data.insert(t_.data.end(), values, values + t_.stride);
        t_.internal.push_back(internal);
        t_.weight.push_back(weight);
        t_.from_left.push_back(l);
        t_.from_right.push_back(r);
        return t_.size() <= max_states;
    }

private:
    Table& t_;
    std::string key_;
    std::unordered_map<std::string, int> index_;
};

bool dominates_raw(const std::uint8_t* p, std::uint8_t pi, const std::uint8_t* q, std::uint8_t qi, int stride) {
    if (pi < qi) return false;
    for (int i = 0; i < stride; ++i)
        if (p[i] < q[i]) return false;
    return true;
}

// Drops states dominated by a no-more-expensive state.
void prune(Table& t, long& work) {
    const int n = t.size();
    if (n < 2 || static_cast<long>(n) * n > 50'000'000L) return;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return t.weight[a] < t.weight[b]; });
    std::vector<int> kept;
    for (int i : order) {
        bool dominated = false;
        for (int j : kept) {
            ++work;
            if (dominates_raw(t.values(j), t.internal[j], t.values(i), t.internal[i], t.stride)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(i);
    }
    if (static_cast<int>(kept.size()) == n) return;
    std::sort(kept.begin(), kept.end());
    Table out;
    out.sep = t.sep;
    out.stride = t.stride;
    for (int i : kept) {
        out.data.insert(out.data.end(), t.values(i), t.values(i) + t.stride);
        out.internal.push_back(t.internal[i]);
        out.weight.push_back(t.weight[i]);
        out.from_left.push_back(t.from_left[i]);
        out.from_right.push_back(t.from_right[i]);
    }
    t = std::move(out);
}

int index_in(const std::vector<VertexId>& sorted, VertexId v) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

}  // namespace

CutProfile brute_force_profile(Mode mode, std::span<const VertexId> separator, std::span<const VertexId> interior,
                               std::span<const Edge> edges) {
    std::vector<VertexId> verts(separator.begin(), separator.end());
    verts.insert(verts.end(), interior.begin(), interior.end());
    const int s = static_cast<int>(separator.size()), nv = static_cast<int>(verts.size());
    const auto local = [&](VertexId v) {
        const auto it = std::find(verts.begin(), verts.end(), v);
        if (it == verts.end()) throw Error(ErrorKind::InvalidArgument, "edge endpoint outside the vertex set");
        return static_cast<int>(it - verts.begin());
    };
    std::vector<std::pair<int, int>> local_edges;
    for (const Edge& e : edges) local_edges.push_back({local(e.a), local(e.b)});

    CutProfile p;
    if (mode == Mode::ECSS) {
        const unsigned full = (1u << s) - 1, all = (1u << nv) - 1;
        p.values.assign(std::size_t{1} << s, 3);
        p.values[0] = p.values[full] = 0;
        for (unsigned y = 0; y <= all; ++y) {
            int cut = 0;
            for (const auto& [a, b] : local_edges) cut += ((y >> a) & 1) != ((y >> b) & 1);
            const unsigned trace = y & full;
            if (trace == 0 || trace == full) {
                if (y != 0 && y != all) p.internal = std::min<std::uint8_t>(p.internal, cap3(cut));
            } else {
                p.values[trace] = std::min(p.values[trace], cap3(cut));
            }
        }
        return p;
    }
    p.values.assign(static_cast<std::size_t>(4 * pow3(s)), 3);
    std::vector<int> label(nv, 0);
    const int total = pow3(nv);
    for (int code = 0; code < total; ++code) {
        for (int i = 0, t = code; i < nv; ++i, t /= 3) label[i] = t % 3;
        bool ok = true;
        for (const auto& [a, b] : local_edges)
            if (label[a] != 1 && label[b] != 1 && label[a] != label[b]) ok = false;
        if (!ok) continue;
        int lab = 0, z = 0, flags = 0;
        for (int i = s - 1; i >= 0; --i) lab = lab * 3 + label[i];
        for (int i = s; i < nv; ++i) {
            z += label[i] == 1;
            flags |= label[i] == 0 ? 1 : label[i] == 2 ? 2 : 0;
        }
        auto& slot = p.values[4 * lab + flags];
        slot = std::min(slot, cap3(z));
    }
    return p;
}

bool profile_is_dead(Mode mode, const CutProfile& p, int separator_size) {
    return dead_values(mode, p.values.data(), p.internal, separator_size);
}

bool profile_dominates(const CutProfile& p, const CutProfile& q) {
    return p.values.size() == q.values.size() &&
           dominates_raw(p.values.data(), p.internal, q.values.data(), q.internal, static_cast<int>(p.values.size()));
}

std::optional<DpResult> solve_dp(Mode mode, const EmbeddedMultigraph& g, std::span<const int> weight,
                                 const BranchDecomposition& bd, const DpLimits& limits) {
    const int n = g.vertex_count(), m = g.edge_count();
    if (mode == Mode::VCSS && n < 4) throw Error(ErrorKind::InfeasibleSlice, "fewer than four vertices");
    if (n > 1)
        for (VertexId v = 0; v < n; ++v)
            if (g.degree(v) == 0) throw Error(ErrorKind::InfeasibleSlice, "isolated vertex");
    if (m == 0) {
        if (n <= 1) return DpResult{};
        throw Error(ErrorKind::InfeasibleSlice, "no edges");
    }
    const int max_union = limits.max_union > 0 ? limits.max_union : (mode == Mode::ECSS ? 16 : 8);

    DpResult result;
    std::vector<Table> tables(bd.nodes.size());
    std::vector<std::uint8_t> buffer;
    for (int x : bd.postorder()) {
        const auto& node = bd.nodes[x];
        Table& t = tables[x];
        t.sep = bd.separators[x];
        const int s = static_cast<int>(t.sep.size());
        if (s > max_union) return std::nullopt;
        t.stride = stride_of(mode, s);
        TableBuilder builder(t);

        if (node.is_leaf()) {
            const Edge e = g.edge(node.edge);
            std::vector<VertexId> interior;
            for (VertexId v : {e.a, e.b})
                if (!std::binary_search(t.sep.begin(), t.sep.end(), v)) interior.push_back(v);
            for (int taken = 0; taken < 2; ++taken) {
                const std::vector<Edge> chosen = taken ? std::vector<Edge>{e} : std::vector<Edge>{};
                const CutProfile p = brute_force_profile(mode, t.sep, interior, chosen);
                if (profile_is_dead(mode, p, s)) continue;
                builder.add(p.values.data(), p.internal, taken ? weight[node.edge] : 0, taken, -1, limits.max_states);
            }
            result.peak_states = std::max<long>(result.peak_states, t.size());
            continue;
        }

        const Table& L = tables[node.left];
        const Table& R = tables[node.right];
        std::vector<VertexId> u;
        std::set_union(L.sep.begin(), L.sep.end(), R.sep.begin(), R.sep.end(), std::back_inserter(u));
        const int us = static_cast<int>(u.size());
        if (us > max_union) return std::nullopt;
        for (VertexId v : t.sep)
            if (!std::binary_search(u.begin(), u.end(), v))
                throw Error(ErrorKind::CorruptDecomposition, "separator not covered by its children");
        std::vector<int> pos_l, pos_r, pos_s;
        for (VertexId v : L.sep) pos_l.push_back(index_in(u, v));
        for (VertexId v : R.sep) pos_r.push_back(index_in(u, v));
        for (VertexId v : t.sep) pos_s.push_back(index_in(u, v));
        std::vector<char> forgotten(us, 1);
        for (int p : pos_s) forgotten[p] = 0;

        const long enumeration = mode == Mode::ECSS ? (1L << us) : pow3(us);
        const long estimate = static_cast<long>(L.size()) * R.size() * enumeration * (mode == Mode::ECSS ? 1 : 16);
        result.work += estimate;
        if (result.work > limits.max_work) return std::nullopt;

        // Projections of every assignment on U to the two children and S.
        std::vector<int> proj_l(enumeration), proj_r(enumeration), proj_s(enumeration), extra(enumeration);
        std::vector<int> digit(us);
        for (long z = 0; z < enumeration; ++z) {
            if (mode == Mode::ECSS) {
                for (int i = 0; i < us; ++i) digit[i] = static_cast<int>((z >> i) & 1);
            } else {
                long t3 = z;
                for (int i = 0; i < us; ++i, t3 /= 3) digit[i] = static_cast<int>(t3 % 3);
            }
            const int base = mode == Mode::ECSS ? 2 : 3;
            const auto project = [&](const std::vector<int>& pos) {
                int r = 0;
                for (int i = static_cast<int>(pos.size()) - 1; i >= 0; --i) r = r * base + digit[pos[i]];
                return r;
            };
            proj_l[z] = project(pos_l);
            proj_r[z] = project(pos_r);
            proj_s[z] = project(pos_s);
            if (mode == Mode::VCSS) {
                int zf = 0, flags = 0;
                for (int i = 0; i < us; ++i) {
                    if (!forgotten[i]) continue;
                    zf += digit[i] == 1;
                    flags |= digit[i] == 0 ? 1 : digit[i] == 2 ? 2 : 0;
                }
                extra[z] = zf | flags << 4;
            }
        }

        const unsigned full_s = (1u << s) - 1;
        const long full_u = enumeration - 1;
        buffer.resize(t.stride);
        for (int a = 0; a < L.size(); ++a) {
            const std::uint8_t* lv = L.values(a);
            for (int b = 0; b < R.size(); ++b) {
                const std::uint8_t* rv = R.values(b);
                std::uint8_t internal = 3;
                if (mode == Mode::ECSS) {
                    std::fill(buffer.begin(), buffer.end(), 3);
                    buffer[0] = buffer[full_s] = 0;
                    internal = std::min(L.internal[a], R.internal[b]);
                    for (long z = 0; z < enumeration && internal >= 3; ++z) {
                        const std::uint8_t v = cap3(lv[proj_l[z]] + rv[proj_r[z]]);
                        const unsigned zs = static_cast<unsigned>(proj_s[z]);
                        if (zs == 0 || zs == full_s) {
                            if (z != 0 && z != full_u) internal = std::min(internal, v);
                        } else if (v < buffer[zs]) {
                            buffer[zs] = v;
                        }
                    }
                    if (internal < 3) continue;
                } else {
                    std::fill(buffer.begin(), buffer.end(), 3);
                    for (long z = 0; z < enumeration; ++z) {
                        const std::uint8_t* lp = lv + 4 * proj_l[z];
                        const std::uint8_t* rp = rv + 4 * proj_r[z];
                        const int zf = extra[z] & 15, ff = extra[z] >> 4;
                        if (zf >= 3) continue;
                        std::uint8_t* out = buffer.data() + 4 * proj_s[z];
                        for (int fl = 0; fl < 4; ++fl) {
                            if (lp[fl] + zf >= 3) continue;
                            for (int fr = 0; fr < 4; ++fr) {
                                const int v = lp[fl] + rp[fr] + zf;
                                if (v >= 3) continue;
                                std::uint8_t& slot = out[fl | fr | ff];
                                if (v < slot) slot = static_cast<std::uint8_t>(v);
                            }
                        }
                    }
                    if (dead_values(mode, buffer.data(), 3, s)) continue;
                }
                if (!builder.add(buffer.data(), internal, L.weight[a] + R.weight[b], a, b, limits.max_states))
                    return std::nullopt;
            }
        }
        prune(t, result.work);
        result.peak_states = std::max<long>(result.peak_states, t.size());
    }

    const Table& root = tables[bd.root];
    if (root.size() == 0) throw Error(ErrorKind::InfeasibleSlice, "no feasible subgraph");
    int best = 0;
    for (int i = 1; i < root.size(); ++i)
        if (root.weight[i] < root.weight[best]) best = i;
    result.weight = root.weight[best];

    std::vector<std::pair<int, int>> stack{{bd.root, best}};
    while (!stack.empty()) {
        const auto [x, i] = stack.back();
        stack.pop_back();
        const auto& node = bd.nodes[x];
        if (node.is_leaf()) {
            if (tables[x].from_left[i]) result.edges.push_back(node.edge);
            continue;
        }
        stack.push_back({node.left, tables[x].from_left[i]});
        stack.push_back({node.right, tables[x].from_right[i]});
    }
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

}  // namespace planar3c
