#include "spanlab/serialize.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spanlab {

namespace {

constexpr char kMagic[4] = {'S', 'P', 'L', 'O'};
constexpr uint32_t kVersion = 1;

class Writer {
public:
    void u8(uint8_t x) { buf_.push_back(char(x)); }
    void u32(uint32_t x) {
        for (int i = 0; i < 4; ++i) buf_.push_back(char((x >> (8 * i)) & 0xff));
    }
    void u64(uint64_t x) {
        for (int i = 0; i < 8; ++i) buf_.push_back(char((x >> (8 * i)) & 0xff));
    }
    void i32(int32_t x) { u32(uint32_t(x)); }
    void i64(int64_t x) { u64(uint64_t(x)); }
    void f64(double x) {
        uint64_t bits;
        std::memcpy(&bits, &x, 8);
        u64(bits);
    }
    template <typename T, typename Fn>
    void vec(const std::vector<T>& v, Fn item) {
        u64(v.size());
        for (const T& x : v) item(x);
    }
    const std::string& bytes() const { return buf_; }

private:
    std::string buf_;
};

class Reader {
public:
    explicit Reader(const std::string& b) : buf_(b) {}
    uint8_t u8() { return uint8_t(take(1)[0]); }
    uint32_t u32() {
        const char* p = take(4);
        uint32_t x = 0;
        for (int i = 0; i < 4; ++i) x |= uint32_t(uint8_t(p[i])) << (8 * i);
        return x;
    }
    uint64_t u64() {
        const char* p = take(8);
        uint64_t x = 0;
        for (int i = 0; i < 8; ++i) x |= uint64_t(uint8_t(p[i])) << (8 * i);
        return x;
    }
    int32_t i32() { return int32_t(u32()); }
    int64_t i64() { return int64_t(u64()); }
    double f64() {
        uint64_t bits = u64();
        double x;
        std::memcpy(&x, &bits, 8);
        return x;
    }
    template <typename T, typename Fn>
    std::vector<T> vec(Fn item) {
        uint64_t n = u64();
        if (n > (buf_.size() - pos_ + 1) * 8ull + 16)
            throw std::runtime_error("oracle file: corrupt length");
        std::vector<T> v;
        v.reserve(static_cast<size_t>(n));
        for (uint64_t i = 0; i < n; ++i) v.push_back(item());
        return v;
    }

private:
    const char* take(size_t k) {
        if (pos_ + k > buf_.size()) throw std::runtime_error("oracle file: truncated");
        const char* p = buf_.data() + pos_;
        pos_ += k;
        return p;
    }
    const std::string& buf_;
    size_t pos_ = 0;
};

// --- field-by-field writers/readers ------------------------------------------

void put(Writer& w, const WeightedGraph& g) {
    w.i32(g.n());
    w.vec(g.edges(), [&](const Edge& e) {
        w.i32(e.u);
        w.i32(e.v);
        w.f64(e.w);
    });
}

WeightedGraph get_graph(Reader& r) {
    int n = r.i32();
    auto edges = r.vec<Edge>([&] {
        Edge e;
        e.u = r.i32();
        e.v = r.i32();
        e.w = r.f64();
        return e;
    });
    return WeightedGraph(n, edges);
}

void put(Writer& w, const SampleHierarchy& h) {
    w.i32(h.requested_levels);
    w.u64(h.seed);
    w.vec(h.probabilities, [&](double p) { w.f64(p); });
    w.vec(h.levels, [&](const std::vector<Vertex>& lv) {
        w.vec(lv, [&](Vertex v) { w.i32(v); });
    });
}

SampleHierarchy get_hierarchy(Reader& r) {
    SampleHierarchy h;
    h.requested_levels = r.i32();
    h.seed = r.u64();
    h.probabilities = r.vec<double>([&] { return r.f64(); });
    h.levels = r.vec<std::vector<Vertex>>(
        [&] { return r.vec<Vertex>([&] { return Vertex(r.i32()); }); });
    return h;
}

void put(Writer& w, const BunchTable& t) {
    auto put_level_i32 = [&](const std::vector<std::vector<Vertex>>& lv) {
        w.vec(lv, [&](const std::vector<Vertex>& row) {
            w.vec(row, [&](Vertex v) { w.i32(v); });
        });
    };
    put_level_i32(t.pivot);
    w.vec(t.pivot_dist, [&](const std::vector<double>& row) {
        w.vec(row, [&](double d) { w.f64(d); });
    });
    put_level_i32(t.pivot_parent);
    w.vec(t.level_of, [&](int x) { w.i32(x); });
    w.vec(t.bunch, [&](const std::vector<std::pair<Vertex, double>>& row) {
        w.vec(row, [&](const std::pair<Vertex, double>& e) {
            w.i32(e.first);
            w.f64(e.second);
        });
    });
    w.vec(t.cluster, [&](const std::vector<std::pair<Vertex, ClusterEntry>>& row) {
        w.vec(row, [&](const std::pair<Vertex, ClusterEntry>& e) {
            w.i32(e.first);
            w.i32(e.second.parent);
            w.f64(e.second.dist);
            w.i32(e.second.height);
        });
    });
}

BunchTable get_bunch_table(Reader& r) {
    BunchTable t;
    auto get_level_i32 = [&] {
        return r.vec<std::vector<Vertex>>(
            [&] { return r.vec<Vertex>([&] { return Vertex(r.i32()); }); });
    };
    t.pivot = get_level_i32();
    t.pivot_dist =
        r.vec<std::vector<double>>([&] { return r.vec<double>([&] { return r.f64(); }); });
    t.pivot_parent = get_level_i32();
    t.level_of = r.vec<int>([&] { return r.i32(); });
    t.bunch = r.vec<std::vector<std::pair<Vertex, double>>>([&] {
        return r.vec<std::pair<Vertex, double>>([&] {
            Vertex v = Vertex(r.i32());
            double d = r.f64();
            return std::pair<Vertex, double>(v, d);
        });
    });
    t.cluster = r.vec<std::vector<std::pair<Vertex, ClusterEntry>>>([&] {
        return r.vec<std::pair<Vertex, ClusterEntry>>([&] {
            Vertex v = Vertex(r.i32());
            ClusterEntry e;
            e.parent = Vertex(r.i32());
            e.dist = r.f64();
            e.height = r.i32();
            return std::pair<Vertex, ClusterEntry>(v, e);
        });
    });
    return t;
}

void put(Writer& w, const TZOracle& o) {
    put(w, o.hierarchy);
    put(w, o.table);
    w.vec(o.spanner_edges, [&](EdgeId e) { w.i32(e); });
    w.i32(o.declared_k);
}

TZOracle get_tz(Reader& r) {
    TZOracle o;
    o.hierarchy = get_hierarchy(r);
    o.table = get_bunch_table(r);
    o.spanner_edges = r.vec<EdgeId>([&] { return EdgeId(r.i32()); });
    o.declared_k = r.i32();
    return o;
}

void put(Writer& w, const TZEmulator& e) {
    w.vec(e.points, [&](Vertex v) { w.i32(v); });
    put(w, e.emulator);
    put(w, e.oracle);
    w.vec(e.emulator_edges_original, [&](const Edge& ed) {
        w.i32(ed.u);
        w.i32(ed.v);
        w.f64(ed.w);
    });
}

TZEmulator get_emulator(Reader& r) {
    TZEmulator e;
    e.points = r.vec<Vertex>([&] { return Vertex(r.i32()); });
    e.emulator = get_graph(r);
    e.oracle = get_tz(r);
    e.emulator_edges_original = r.vec<Edge>([&] {
        Edge ed;
        ed.u = r.i32();
        ed.v = r.i32();
        ed.w = r.f64();
        return ed;
    });
    return e;
}

void put(Writer& w, const LambdaSchedule& s) {
    w.i32(s.c);
    w.i32(s.k);
    w.i32(s.F);
    w.vec(s.lambda, [&](int64_t x) { w.i64(x); });
}

LambdaSchedule get_schedule(Reader& r) {
    LambdaSchedule s;
    s.c = r.i32();
    s.k = r.i32();
    s.F = r.i32();
    s.lambda = r.vec<int64_t>([&] { return r.i64(); });
    return s;
}

void put(Writer& w, const HopsetParts& p) {
    w.i32(p.c);
    w.i32(p.k);
    w.f64(p.delta);
    put(w, p.schedule);
    put(w, p.hierarchy);
    put(w, p.table);
    w.vec(p.edges, [&](const HopsetEdge& e) {
        w.i32(e.u);
        w.i32(e.v);
        w.f64(e.w);
        w.u8(uint8_t(e.part));
        w.i32(e.level);
    });
    w.u64(p.h1_count);
    w.u64(p.h2_count);
    w.u64(p.h3_count);
}

HopsetParts get_hopset(Reader& r) {
    HopsetParts p;
    p.c = r.i32();
    p.k = r.i32();
    p.delta = r.f64();
    p.schedule = get_schedule(r);
    p.hierarchy = get_hierarchy(r);
    p.table = get_bunch_table(r);
    p.edges = r.vec<HopsetEdge>([&] {
        HopsetEdge e;
        e.u = r.i32();
        e.v = r.i32();
        e.w = r.f64();
        e.part = HopsetPart(r.u8());
        e.level = r.i32();
        return e;
    });
    p.h1_count = r.u64();
    p.h2_count = r.u64();
    p.h3_count = r.u64();
    p.rebuild_index();
    return p;
}

void put(Writer& w, const PairwiseOracle& o) {
    w.u8(uint8_t(o.mode));
    w.f64(o.declared_stretch);
    w.f64(o.base_stretch);
    w.vec(o.spanner_edges, [&](EdgeId e) { w.i32(e); });
    w.u64(o.stored.size());
    for (const auto& [key, sp] : o.stored) {
        w.i32(key.first);
        w.i32(key.second);
        w.vec(sp.vertices, [&](Vertex v) { w.i32(v); });
        w.vec(sp.kind, [&](uint8_t k) { w.u8(k); });
    }
    w.u8(o.hopset ? 1 : 0);
    if (o.hopset) put(w, *o.hopset);
    w.u8(o.base ? 1 : 0);
    if (o.base) put(w, *o.base);
}

PairwiseOracle get_pairwise(Reader& r) {
    PairwiseOracle o;
    o.mode = PairwiseOracle::Mode(r.u8());
    o.declared_stretch = r.f64();
    o.base_stretch = r.f64();
    o.spanner_edges = r.vec<EdgeId>([&] { return EdgeId(r.i32()); });
    uint64_t m = r.u64();
    for (uint64_t i = 0; i < m; ++i) {
        Vertex a = Vertex(r.i32());
        Vertex b = Vertex(r.i32());
        PairwiseOracle::StoredPath sp;
        sp.vertices = r.vec<Vertex>([&] { return Vertex(r.i32()); });
        sp.kind = r.vec<uint8_t>([&] { return r.u8(); });
        o.stored[{a, b}] = std::move(sp);
    }
    if (r.u8()) o.hopset = std::make_shared<HopsetParts>(get_hopset(r));
    if (r.u8()) o.base = std::make_shared<PairwiseOracle>(get_pairwise(r));
    return o;
}

void put(Writer& w, const SubsetOracle& o) {
    w.vec(o.subset, [&](Vertex v) { w.i32(v); });
    put(w, o.emulator);
    put(w, o.pairwise);
    w.i32(o.emulator_k);
    w.f64(o.declared_stretch);
}

SubsetOracle get_subset(Reader& r) {
    SubsetOracle o;
    o.subset = r.vec<Vertex>([&] { return Vertex(r.i32()); });
    o.emulator = get_emulator(r);
    o.pairwise = get_pairwise(r);
    o.emulator_k = r.i32();
    o.declared_stretch = r.f64();
    return o;
}

void put(Writer& w, const SourcewiseOracle& o) {
    put(w, o.subset);
    w.vec(o.nearest, [&](Vertex v) { w.i32(v); });
    w.vec(o.link, [&](Vertex v) { w.i32(v); });
    w.vec(o.nearest_dist, [&](double d) { w.f64(d); });
    w.f64(o.declared_stretch);
}

SourcewiseOracle get_sourcewise(Reader& r) {
    SourcewiseOracle o;
    o.subset = get_subset(r);
    o.nearest = r.vec<Vertex>([&] { return Vertex(r.i32()); });
    o.link = r.vec<Vertex>([&] { return Vertex(r.i32()); });
    o.nearest_dist = r.vec<double>([&] { return r.f64(); });
    o.declared_stretch = r.f64();
    return o;
}

void put(Writer& w, const PrioritizedOracle& o) {
    w.vec(o.ranking, [&](Vertex v) { w.i32(v); });
    w.vec(o.rank_of, [&](int x) { w.i32(x); });
    w.u8(o.preset == PrefixPreset::Pow2 ? 0 : 1);
    w.i32(o.T);
    w.vec(o.f_values, [&](int64_t x) { w.i64(x); });
    w.vec(o.f_inverse, [&](int x) { w.i32(x); });
    w.u64(o.prefixes.size());
    for (const auto& p : o.prefixes) put(w, p);
    w.vec(o.prefix_k, [&](int x) { w.i32(x); });
    put(w, o.fallback);
    w.i32(o.fallback_k);
}

PrioritizedOracle get_prioritized(Reader& r) {
    PrioritizedOracle o;
    o.ranking = r.vec<Vertex>([&] { return Vertex(r.i32()); });
    o.rank_of = r.vec<int>([&] { return r.i32(); });
    o.preset = r.u8() == 0 ? PrefixPreset::Pow2 : PrefixPreset::Harmonic;
    o.T = r.i32();
    o.f_values = r.vec<int64_t>([&] { return r.i64(); });
    o.f_inverse = r.vec<int>([&] { return r.i32(); });
    uint64_t np = r.u64();
    for (uint64_t i = 0; i < np; ++i) o.prefixes.push_back(get_sourcewise(r));
    o.prefix_k = r.vec<int>([&] { return r.i32(); });
    o.fallback = get_tz(r);
    o.fallback_k = r.i32();
    return o;
}

void put(Writer& w, const RootedForest& f) {
    w.vec(f.parent, [&](Vertex v) { w.i32(v); });
    w.vec(f.height, [&](int h) { w.i32(h); });
    w.vec(f.root_of, [&](Vertex v) { w.i32(v); });
}

RootedForest get_forest(Reader& r) {
    RootedForest f;
    f.parent = r.vec<Vertex>([&] { return Vertex(r.i32()); });
    f.height = r.vec<int>([&] { return r.i32(); });
    f.root_of = r.vec<Vertex>([&] { return Vertex(r.i32()); });
    return f;
}

void put(Writer& w, const ContractedGraph& c) {
    put(w, c.graph);
    w.vec(c.witness, [&](EdgeId e) { w.i32(e); });
}

ContractedGraph get_contracted(Reader& r) {
    ContractedGraph c;
    c.graph = get_graph(r);
    c.witness = r.vec<EdgeId>([&] { return EdgeId(r.i32()); });
    return c;
}

void put(Writer& w, const UnweightedPrdo& o) {
    w.i32(o.k);
    w.i32(o.clustering.radius);
    w.vec(o.clustering.cluster_of, [&](int c) { w.i32(c); });
    put(w, o.clustering.forest);
    w.vec(o.clustering.roots, [&](Vertex v) { w.i32(v); });
    put(w, o.cg);
    put(w, o.tz);
}

UnweightedPrdo get_unweighted_prdo(Reader& r) {
    UnweightedPrdo o;
    o.k = r.i32();
    o.clustering.radius = r.i32();
    o.clustering.cluster_of = r.vec<int>([&] { return r.i32(); });
    o.clustering.forest = get_forest(r);
    o.clustering.roots = r.vec<Vertex>([&] { return Vertex(r.i32()); });
    o.cg = get_contracted(r);
    o.tz = get_tz(r);
    return o;
}

void put(Writer& w, const WeightedPrdo& o) {
    w.i32(o.k);
    w.i32(o.l);
    w.i32(o.hierarchy.levels);
    w.u64(o.hierarchy.forest.size());
    for (const auto& f : o.hierarchy.forest) put(w, f);
    w.vec(o.hierarchy.tree_of, [&](const std::vector<int>& row) {
        w.vec(row, [&](int x) { w.i32(x); });
    });
    w.vec(o.hierarchy.tree_counts, [&](int x) { w.i32(x); });
    put(w, o.top);
    put(w, o.tz);
}

WeightedPrdo get_weighted_prdo(Reader& r) {
    WeightedPrdo o;
    o.k = r.i32();
    o.l = r.i32();
    o.hierarchy.levels = r.i32();
    uint64_t nf = r.u64();
    for (uint64_t i = 0; i < nf; ++i) o.hierarchy.forest.push_back(get_forest(r));
    o.hierarchy.tree_of =
        r.vec<std::vector<int>>([&] { return r.vec<int>([&] { return r.i32(); }); });
    o.hierarchy.tree_counts = r.vec<int>([&] { return r.i32(); });
    o.top = get_contracted(r);
    o.tz = get_tz(r);
    return o;
}

}  // namespace

OracleKind kind_of(const AnyOracle& o) {
    return std::visit(
        [](const auto& x) -> OracleKind {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, TZOracle>) return OracleKind::TZ;
            if constexpr (std::is_same_v<T, HopsetParts>) return OracleKind::Hopset;
            if constexpr (std::is_same_v<T, PairwiseOracle>) return OracleKind::Pairwise;
            if constexpr (std::is_same_v<T, SubsetOracle>) return OracleKind::Subset;
            if constexpr (std::is_same_v<T, SourcewiseOracle>) return OracleKind::Sourcewise;
            if constexpr (std::is_same_v<T, PrioritizedOracle>) return OracleKind::Prioritized;
            if constexpr (std::is_same_v<T, UnweightedPrdo>) return OracleKind::ClusterUnweighted;
            if constexpr (std::is_same_v<T, WeightedPrdo>) return OracleKind::ClusterWeighted;
        },
        o);
}

std::string kind_name(OracleKind k) {
    switch (k) {
        case OracleKind::TZ: return "tz";
        case OracleKind::Hopset: return "hopset";
        case OracleKind::Pairwise: return "pairwise";
        case OracleKind::Subset: return "subset";
        case OracleKind::Sourcewise: return "sourcewise";
        case OracleKind::Prioritized: return "prioritized";
        case OracleKind::ClusterUnweighted: return "cluster-unweighted";
        case OracleKind::ClusterWeighted: return "cluster-weighted";
    }
    return "unknown";
}

std::string save_oracle(const AnyOracle& o) {
    Writer w;
    for (char c : kMagic) w.u8(uint8_t(c));
    w.u32(kVersion);
    w.u8(uint8_t(kind_of(o)));
    std::visit([&](const auto& x) { put(w, x); }, o);
    return w.bytes();
}

AnyOracle load_oracle(const std::string& bytes) {
    Reader r(bytes);
    char magic[4];
    for (char& c : magic) c = char(r.u8());
    if (std::memcmp(magic, kMagic, 4) != 0) throw std::runtime_error("not an oracle file");
    uint32_t version = r.u32();
    if (version != kVersion) throw std::runtime_error("unsupported oracle file version");
    OracleKind kind = OracleKind(r.u8());
    switch (kind) {
        case OracleKind::TZ: return get_tz(r);
        case OracleKind::Hopset: return get_hopset(r);
        case OracleKind::Pairwise: return get_pairwise(r);
        case OracleKind::Subset: return get_subset(r);
        case OracleKind::Sourcewise: return get_sourcewise(r);
        case OracleKind::Prioritized: return get_prioritized(r);
        case OracleKind::ClusterUnweighted: return get_unweighted_prdo(r);
        case OracleKind::ClusterWeighted: return get_weighted_prdo(r);
    }
    throw std::runtime_error("unknown oracle kind tag");
}

void save_oracle_file(const AnyOracle& o, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    std::string bytes = save_oracle(o);
    out.write(bytes.data(), std::streamsize(bytes.size()));
    if (!out) throw std::runtime_error("failed writing: " + path);
}

AnyOracle load_oracle_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open oracle file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_oracle(ss.str());
}

}  // namespace spanlab
