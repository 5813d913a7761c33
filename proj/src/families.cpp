#include "leaky/families.hpp"

#include <sstream>

#include "leaky/perturbation.hpp"

namespace leaky {

namespace {

[[noreturn]] void domain_fail(const std::string& what) { throw std::domain_error(what); }

void require(bool ok, const std::string& what) {
    if (!ok) domain_fail(what);
}

}  // namespace

const char* to_string(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete: return "complete";
        case Family::complete_minus_edge: return "complete_minus_edge";
        case Family::complete_join_leaf: return "complete_join_leaf";
        case Family::generalized_petersen: return "petersen";
        case Family::tree: return "tree";
        case Family::unicyclic: return "unicyclic";
        case Family::gadget: return "gadget";
    }
    return "?";
}

const char* to_string(GadgetKind k) {
    switch (k) {
        case GadgetKind::double_star_bridge: return "double_star_bridge";
        case GadgetKind::p6_plus_e: return "p6_plus_e";
        case GadgetKind::clique_leaf_quad: return "clique_leaf_quad";
        case GadgetKind::shared_clique_leaf: return "shared_clique_leaf";
        case GadgetKind::deep_star_tree: return "deep_star_tree";
    }
    return "?";
}

Graph make_path(int n) {
    require(n >= 2, "path requires n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph make_cycle(int n) {
    require(n >= 3, "cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph make_star(int n) {
    require(n >= 2, "star requires n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, edges);
}

Graph make_complete(int n) {
    require(n >= 1, "complete requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph make_complete_minus_edge(int n) {
    require(n >= 3, "complete_minus_edge requires n >= 3");
    return remove_edge(make_complete(n), 0, 1);
}

Graph make_complete_join_leaf(int n) {
    require(n >= 3, "complete_join_leaf requires n >= 3");
    auto edges = make_complete(n - 1).edges();
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

int gp_outer_id(int n, long long i) {
    long long r = ((i - 1) % n + n) % n;
    return static_cast<int>(r);
}

int gp_inner_id(int n, long long i) {
    long long r = ((i - 1) % n + n) % n;
    return static_cast<int>(n + r);
}

Graph make_generalized_petersen(int n, int k) {
    require(n >= 3, "generalized Petersen requires n >= 3");
    require(k >= 1 && 2 * k <= n - 1, "generalized Petersen requires 1 <= k <= (n-1)/2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(gp_outer_id(n, i), gp_outer_id(n, i + 1));  // outer cycle
        edges.emplace_back(gp_inner_id(n, i), gp_outer_id(n, i));      // spoke
        edges.emplace_back(gp_inner_id(n, i), gp_inner_id(n, i + k));  // inner step
    }
    return Graph(2 * n, edges);
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: return make_path(spec.n);
        case Family::cycle: return make_cycle(spec.n);
        case Family::star: return make_star(spec.n);
        case Family::complete: return make_complete(spec.n);
        case Family::complete_minus_edge: return make_complete_minus_edge(spec.n);
        case Family::complete_join_leaf: return make_complete_join_leaf(spec.n);
        case Family::generalized_petersen: return make_generalized_petersen(spec.n, spec.k);
        case Family::tree: {
            int n = 0;
            for (auto [u, v] : spec.edges) n = std::max({n, u + 1, v + 1});
            Graph g(n, spec.edges);
            if (!is_tree(g)) domain_fail("edge list does not describe a tree");
            return g;
        }
        case Family::unicyclic: {
            int n = 0;
            for (auto [u, v] : spec.edges) n = std::max({n, u + 1, v + 1});
            Graph g(n, spec.edges);
            unique_cycle(g);  // throws if not unicyclic
            return g;
        }
        case Family::gadget: return make_gadget(spec.gadget_kind, spec.ell, spec.d).graph;
    }
    domain_fail("unknown family");
}

FamilySpec FamilySpec::parse(std::string_view text) {
    size_t colon = text.find(':');
    std::string name(text.substr(0, colon));
    std::vector<std::string> args;
    if (colon != std::string_view::npos) {
        std::string rest(text.substr(colon + 1));
        std::istringstream rs(rest);
        std::string tok;
        while (std::getline(rs, tok, ',')) args.push_back(tok);
    }
    auto int_arg = [&](size_t i) {
        if (i >= args.size()) domain_fail("family " + name + ": missing parameter");
        try {
            return std::stoi(args[i]);
        } catch (...) {
            domain_fail("family " + name + ": bad integer '" + args[i] + "'");
        }
    };

    FamilySpec spec;
    if (name == "path" || name == "cycle" || name == "star" || name == "complete" ||
        name == "complete_minus_edge" || name == "complete_join_leaf") {
        spec.family = name == "path"                  ? Family::path
                      : name == "cycle"               ? Family::cycle
                      : name == "star"                ? Family::star
                      : name == "complete"            ? Family::complete
                      : name == "complete_minus_edge" ? Family::complete_minus_edge
                                                      : Family::complete_join_leaf;
        spec.n = int_arg(0);
        if (args.size() != 1) domain_fail("family " + name + ": expected one parameter");
    } else if (name == "petersen") {
        spec.family = Family::generalized_petersen;
        spec.n = int_arg(0);
        spec.k = int_arg(1);
        if (args.size() != 2) domain_fail("family petersen: expected n,k");
    } else if (name == "gadget") {
        spec.family = Family::gadget;
        if (args.empty()) domain_fail("family gadget: expected kind[,ell[,d]]");
        const std::string& kind = args[0];
        if (kind == "double_star_bridge") spec.gadget_kind = GadgetKind::double_star_bridge;
        else if (kind == "p6_plus_e") spec.gadget_kind = GadgetKind::p6_plus_e;
        else if (kind == "clique_leaf_quad") spec.gadget_kind = GadgetKind::clique_leaf_quad;
        else if (kind == "shared_clique_leaf") spec.gadget_kind = GadgetKind::shared_clique_leaf;
        else if (kind == "deep_star_tree") spec.gadget_kind = GadgetKind::deep_star_tree;
        else domain_fail("family gadget: unknown kind '" + kind + "'");
        if (args.size() >= 2) spec.ell = int_arg(1);
        if (args.size() >= 3) spec.d = int_arg(2);
    } else {
        domain_fail("unknown family '" + name + "'");
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out = leaky::to_string(family);
    switch (family) {
        case Family::generalized_petersen:
            out += ":" + std::to_string(n) + "," + std::to_string(k);
            break;
        case Family::gadget:
            out += std::string(":") + leaky::to_string(gadget_kind) + "," + std::to_string(ell);
            if (gadget_kind == GadgetKind::deep_star_tree) out += "," + std::to_string(d);
            break;
        case Family::tree:
        case Family::unicyclic:
            out += ":<edge list>";
            break;
        default:
            out += ":" + std::to_string(n);
    }
    return out;
}

}  // namespace leaky
