#include "leaky/petersen.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "leaky/solver.hpp"

namespace leaky {

namespace {

void check_gp_domain(int n, int k) {
    if (n < 3 || k < 1 || 2 * k > n - 1)
        throw std::domain_error("generalized Petersen requires n >= 3 and 1 <= k <= (n-1)/2");
}

}  // namespace

VertexSet BlockPartition::union_of_a() const {
    VertexSet s(2 * n);
    for (const Block& b : blocks) s |= b.a;
    return s;
}

BlockPartition block_partition(int n, int k) {
    check_gp_domain(n, k);
    BlockPartition part;
    part.n = n;
    part.k = k;
    part.block_width = 4 * k + 4;
    part.complete_block_count = n / part.block_width;
    part.block_count = (n + part.block_width - 1) / part.block_width;
    part.truncated = n % part.block_width != 0;

    for (int i = 0; i < part.block_count; ++i) {
        BlockPartition::Block block{VertexSet(2 * n), VertexSet(2 * n), VertexSet(2 * n),
                                    VertexSet(2 * n)};
        int base = part.block_width * i;  // indices base+1 .. base+4k+4, clipped at n
        for (int j = 1; j <= 2 * k + 2; ++j) {
            if (base + j <= n) {
                block.a.insert(gp_outer_id(n, base + j));
                block.b.insert(gp_inner_id(n, base + j));
            }
            if (base + 2 * k + 2 + j <= n) {
                block.c.insert(gp_outer_id(n, base + 2 * k + 2 + j));
                block.d.insert(gp_inner_id(n, base + 2 * k + 2 + j));
            }
        }
        part.blocks.push_back(std::move(block));
    }
    return part;
}

VertexSet gp_one_leaky_set(int n, int k) {
    check_gp_domain(n, k);
    if (n < 2 * k) throw std::domain_error("gp_one_leaky_set requires n >= 2k");
    VertexSet s(2 * n);
    for (int i = 1; i <= 2 * k; ++i) s.insert(gp_inner_id(n, i));
    s.insert(gp_outer_id(n, k));
    s.insert(gp_outer_id(n, k + 1));
    return s;
}

VertexSet gp_all_a_blocks(int n, int k) { return block_partition(n, k).union_of_a(); }

VertexSet gp_two_leaky_set(int n, int k) {
    check_gp_domain(n, k);
    if (k < 7) throw std::domain_error("gp_two_leaky_set requires k >= 7");
    if (n < 10 * k + 10) throw std::domain_error("gp_two_leaky_set requires n >= 10k+10");
    return gp_all_a_blocks(n, k);
}

const char* to_string(GpSetKind kind) {
    switch (kind) {
        case GpSetKind::one_leaky: return "one_leaky";
        case GpSetKind::two_leaky: return "two_leaky";
        case GpSetKind::all_a_blocks: return "all_A_blocks";
    }
    return "?";
}

GpVerification verify_construction(int n, int k, int ell, GpSetKind kind) {
    GpVerification v;
    v.n = n;
    v.k = k;
    v.ell = ell;
    v.kind = kind;
    switch (kind) {
        case GpSetKind::one_leaky: v.set = gp_one_leaky_set(n, k); break;
        case GpSetKind::two_leaky: v.set = gp_two_leaky_set(n, k); break;
        case GpSetKind::all_a_blocks: v.set = gp_all_a_blocks(n, k); break;
    }
    Graph g = make_generalized_petersen(n, k);

    LeakCheck check = is_leaky_forcing_set(g, v.set, ell);
    v.ok = check.ok;
    v.counterexample = check.counterexample;
    v.leak_sets_tested = check.leak_sets_tested;

    VertexSet no_leaks(g.vertex_count());
    v.forcer_counts.assign(g.vertex_count(), -1);
    for (int w = 0; w < g.vertex_count(); ++w)
        if (!v.set.contains(w)) v.forcer_counts[w] = feasible_forcers(g, v.set, no_leaks, w).size();
    return v;
}

namespace {

// Published exact values, columns ell = 0,1,2.
struct PublishedCell {
    int n, k, values[3];
};
constexpr PublishedCell published_table[] = {
    {5, 2, {5, 5, 5}}, {6, 2, {4, 6, 6}}, {7, 2, {5, 6, 6}},  {8, 2, {5, 5, 7}},
    {9, 2, {6, 6, 8}}, {7, 3, {6, 6, 6}}, {8, 3, {6, 6, 8}},  {9, 3, {6, 6, 8}},
    {10, 3, {8, 8, 8}}, {11, 3, {7, 7, 9}},
};

TableCell solve_cell(int n, int k, int ell, int published_value,
                     std::optional<double> timeout_secs) {
    TableCell cell;
    cell.n = n;
    cell.k = k;
    cell.ell = ell;
    cell.published = published_value;
    auto start = std::chrono::steady_clock::now();
    SolveOptions options;
    if (timeout_secs)
        options.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                       std::chrono::duration<double>(*timeout_secs));
    try {
        cell.computed = leaky_forcing_number(make_generalized_petersen(n, k), ell, options).value;
    } catch (const SolverTimeout& timeout) {
        cell.lower = timeout.lower_bound;
        cell.upper = timeout.upper_bound;
    }
    cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cell;
}

}  // namespace

std::vector<TableCell> small_case_table(bool include_slow,
                                        std::optional<double> per_cell_timeout_secs, int threads) {
    std::vector<std::tuple<int, int, int, int>> jobs;  // n, k, ell, published value
    for (const PublishedCell& row : published_table) {
        bool slow = row.k == 3 && row.n >= 10;
        if (slow && !include_slow) continue;
        for (int ell = 0; ell <= 2; ++ell) jobs.emplace_back(row.n, row.k, ell, row.values[ell]);
    }

    std::vector<TableCell> cells(jobs.size());
    if (threads <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) {
            auto [n, k, ell, published] = jobs[i];
            cells[i] = solve_cell(n, k, ell, published, per_cell_timeout_secs);
        }
        return cells;
    }

    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            auto [n, k, ell, published] = jobs[i];
            cells[i] = solve_cell(n, k, ell, published, per_cell_timeout_secs);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    return cells;
}

std::string table_to_csv(const std::vector<TableCell>& cells) {
    std::string out = "n,k,ell,computed,published,diff,lower,upper,seconds\n";
    char buf[64];
    for (const TableCell& c : cells) {
        out += std::to_string(c.n) + "," + std::to_string(c.k) + "," + std::to_string(c.ell) + ",";
        out += c.computed ? std::to_string(*c.computed) : "";
        out += "," + std::to_string(c.published) + ",";
        out += c.computed ? std::to_string(*c.computed - c.published) : "";
        out += ",";
        out += c.lower ? std::to_string(*c.lower) : "";
        out += ",";
        out += c.upper ? std::to_string(*c.upper) : "";
        std::snprintf(buf, sizeof buf, ",%.3f\n", c.seconds);
        out += buf;
    }
    return out;
}

// --- closed forms -----------------------------------------------------------

namespace {

// Exact one-leak witnesses for cells below the 2k+2 construction, frozen from
// the exact solver (lexicographically least minimum sets).
struct FrozenWitness {
    int n, k, ell;
    std::vector<int> vertices;
};

const FrozenWitness* find_frozen(int n, int k, int ell);

VertexSet frozen_set(int n, const FrozenWitness& w) {
    VertexSet s(2 * n);
    for (int v : w.vertices) s.insert(v);
    return s;
}

}  // namespace

CaseReport petersen_family_value(int n, int k, int ell) {
    check_gp_domain(n, k);
    CaseReport report;
    if (ell >= 3) {
        report.theorem = "petersen-three-plus-leaks";
        report.case_label = "petersen/all-vertices";
        report.value = 2 * n;
        report.witness = VertexSet::full(2 * n);
        return report;
    }

    auto constructed = [&](const char* theorem, const char* label) {
        report.theorem = theorem;
        report.case_label = label;
        report.witness = gp_one_leaky_set(n, k);
        report.value = report.witness.size();
        return report;
    };
    auto frozen = [&](const char* theorem, const char* label) {
        const FrozenWitness* w = find_frozen(n, k, ell);
        if (!w) throw std::logic_error("petersen_family_value: missing frozen witness");
        report.theorem = theorem;
        report.case_label = label;
        report.witness = frozen_set(n, *w);
        report.value = report.witness.size();
        return report;
    };

    if (k == 1) {
        if (ell <= 1) {
            if (n == 3) return frozen("petersen-k1", "petersen-k1/prism-triangle");
            return constructed("petersen-k1", "petersen-k1/prism");
        }
        if (ell == 2 && n == 3) return frozen("petersen-k1", "petersen-k1/prism-triangle-two-leaks");
        throw NotCovered("P(n,1) has no published value at ell = 2 for n >= 4",
                         "petersen k=1 with ell <= 1 or (n=3, ell=2)");
    }
    if (k == 2 && ell == 1 && n >= 5) {
        if (n == 5 || n == 8) return frozen("petersen-k2-one-leak", "petersen-k2/sporadic");
        return constructed("petersen-k2-one-leak", "petersen-k2/construction");
    }
    if (k == 3 && ell == 1 && n >= 7) {
        if (n <= 9) return frozen("petersen-k3-one-leak", "petersen-k3/small");
        if (n == 11) return frozen("petersen-k3-one-leak", "petersen-k3/n11");
        return constructed("petersen-k3-one-leak", "petersen-k3/construction");
    }
    throw NotCovered("no published exact value for P(" + std::to_string(n) + "," +
                         std::to_string(k) + ") with " + std::to_string(ell) + " leaks",
                     "petersen k in {1,2,3} at ell = 1, or any k at ell >= 3");
}

namespace {

// Values pinned by tests against the exact solver.
const FrozenWitness frozen_witnesses[] = {
    {3, 1, 0, {0, 1, 2}},
    {3, 1, 1, {0, 1, 2}},
    {3, 1, 2, {0, 1, 3, 4}},
    {5, 2, 1, {0, 1, 2, 3, 4}},
    {8, 2, 1, {0, 9, 11, 13, 15}},
    {7, 3, 1, {0, 1, 2, 3, 4, 12}},
    {8, 3, 1, {0, 1, 2, 3, 4, 14}},
    {9, 3, 1, {0, 1, 2, 3, 14, 16}},
    {11, 3, 1, {0, 1, 2, 11, 13, 16, 19}},
};

const FrozenWitness* find_frozen(int n, int k, int ell) {
    for (const FrozenWitness& w : frozen_witnesses)
        if (w.n == n && w.k == k && w.ell == ell) return &w;
    return nullptr;
}

}  // namespace

}  // namespace leaky
