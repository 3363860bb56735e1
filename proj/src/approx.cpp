#include "lstn/approx.hpp"

#include <algorithm>
#include <stdexcept>

#include "lstn/oracle.hpp"

namespace lstn {

const char* producer_tag(Producer p) {
    switch (p) {
        case Producer::A1StarA: return "A1_STAR_A";
        case Producer::A1StarB: return "A1_STAR_B";
        case Producer::A2T1: return "A2_T1";
        case Producer::A2T2: return "A2_T2";
        case Producer::Exact: return "EXACT";
    }
    return "?";
}

namespace {

Selection first_vertex_selection(const Instance& inst) {
    Selection sel;
    sel.points.reserve(inst.n());
    sel.vertex_indices.assign(inst.n(), 0);
    for (const auto& region : inst.regions) sel.points.push_back(region.vertices[0]);
    return sel;
}

// Per region the vertex maximizing max(dist to u, dist to v); ties to the smallest
// vertex index. The two pinned regions keep their preset representatives.
void select_far_from_pair(const Instance& inst, Selection& sel, const Point& u, const Point& v,
                          std::size_t skip_a, std::size_t skip_b) {
    for (std::size_t r = 0; r < inst.n(); ++r) {
        if (r == skip_a || r == skip_b) continue;
        const auto& verts = inst.regions[r].vertices;
        std::size_t pick = 0;
        double pick_score = std::max(dist(verts[0], u), dist(verts[0], v));
        for (std::size_t w = 1; w < verts.size(); ++w) {
            const double score = std::max(dist(verts[w], u), dist(verts[w], v));
            if (score > pick_score) {
                pick = w;
                pick_score = score;
            }
        }
        sel.points[r] = verts[pick];
        sel.vertex_indices[r] = pick;
    }
}

}  // namespace

std::pair<Solution, Solution> a1_stars(const Instance& inst, const NormalizedView& view) {
    const DiameterPair& dp = view.diam_pair;
    const Point& pa = inst.regions[dp.region_a].vertices[dp.vertex_a];
    const Point& pb = inst.regions[dp.region_b].vertices[dp.vertex_b];
    Selection sel = first_vertex_selection(inst);
    sel.points[dp.region_a] = pa;
    sel.vertex_indices[dp.region_a] = dp.vertex_a;
    sel.points[dp.region_b] = pb;
    sel.vertex_indices[dp.region_b] = dp.vertex_b;
    select_far_from_pair(inst, sel, pa, pb, dp.region_a, dp.region_b);

    Tree ta = star(sel, dp.region_a);
    Tree tb = star(sel, dp.region_b);
    Solution sa{sel, std::move(ta), Producer::A1StarA, 0.0};
    sa.length = sa.tree.length;
    Solution sb{std::move(sel), std::move(tb), Producer::A1StarB, 0.0};
    sb.length = sb.tree.length;
    return {std::move(sa), std::move(sb)};
}

Solution algo_a1(const Instance& inst) {
    const NormalizedView view = normalize(inst);
    auto [sa, sb] = a1_stars(inst, view);
    return sb.length > sa.length ? std::move(sb) : std::move(sa);
}

OmegaInfo omega(const Instance& inst, const NormalizedView& view) {
    const std::size_t n = inst.n();
    if (n < 4) throw std::invalid_argument("omega: requires n >= 4");
    if (view.degenerate()) throw std::invalid_argument("omega: undefined for degenerate instance");
    OmegaInfo info;
    info.center = view.center;
    info.containment_radii.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        info.containment_radii[r] =
            farthest_vertex_from(view.center, inst.regions[r]).second / view.scale;
    }
    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(n - 2);
    for (std::size_t r = 0; r < n; ++r) {
        if (r == view.diam_pair.region_a || r == view.diam_pair.region_b) continue;
        order.emplace_back(info.containment_radii[r], r);
    }
    std::sort(order.begin(), order.end());  // (radius, region index): ties by index
    const std::size_t m = n / 2;
    info.radius = order[m - 1].first;
    info.inside.reserve(m);
    for (std::size_t i = 0; i < m; ++i) info.inside.push_back(order[i].second);
    std::sort(info.inside.begin(), info.inside.end());
    return info;
}

Solution candidate_t1(const Instance& inst) {
    require_valid(inst);
    const DiameterPair mono = monochromatic_diameter(inst);
    const std::size_t j = mono.region_a;
    const Point& a1 = inst.regions[j].vertices[mono.vertex_a];
    const Point& b1 = inst.regions[j].vertices[mono.vertex_b];

    Selection sel = first_vertex_selection(inst);
    select_far_from_pair(inst, sel, a1, b1, j, j);

    Selection sel_a = sel;
    sel_a.points[j] = a1;
    sel_a.vertex_indices[j] = mono.vertex_a;
    Selection sel_b = std::move(sel);
    sel_b.points[j] = b1;
    sel_b.vertex_indices[j] = mono.vertex_b;

    Tree ta = star(sel_a, j);
    Tree tb = star(sel_b, j);
    if (tb.length > ta.length) {
        Solution out{std::move(sel_b), std::move(tb), Producer::A2T1, 0.0};
        out.length = out.tree.length;
        return out;
    }
    Solution out{std::move(sel_a), std::move(ta), Producer::A2T1, 0.0};
    out.length = out.tree.length;
    return out;
}

Solution candidate_t2(const Instance& inst, const NormalizedView& view, const OmegaInfo& om) {
    const DiameterPair& dp = view.diam_pair;
    const Point& pa = inst.regions[dp.region_a].vertices[dp.vertex_a];
    const Point& pb = inst.regions[dp.region_b].vertices[dp.vertex_b];
    Selection sel = first_vertex_selection(inst);
    sel.points[dp.region_a] = pa;
    sel.vertex_indices[dp.region_a] = dp.vertex_a;
    sel.points[dp.region_b] = pb;
    sel.vertex_indices[dp.region_b] = dp.vertex_b;

    std::vector<std::size_t> anchor(inst.n(), dp.region_a);
    for (std::size_t r = 0; r < inst.n(); ++r) {
        if (r == dp.region_a || r == dp.region_b) continue;
        const auto [v, radius] = farthest_vertex_from(om.center, inst.regions[r]);
        (void)radius;
        sel.points[r] = inst.regions[r].vertices[v];
        sel.vertex_indices[r] = v;
        // longer connection wins; ties go to a
        if (dist(sel.points[r], pb) > dist(sel.points[r], pa)) anchor[r] = dp.region_b;
    }
    Tree tree = two_star(sel, dp.region_a, dp.region_b, anchor);
    Solution out{std::move(sel), std::move(tree), Producer::A2T2, 0.0};
    out.length = out.tree.length;
    return out;
}

Solution algo_a2(const Instance& inst, std::uint64_t oracle_budget) {
    const NormalizedView view = normalize(inst);
    if (inst.n() <= 3) return exact_opt(inst, oracle_budget);
    if (view.degenerate()) return a1_stars(inst, view).first;  // zero-length tree

    auto [sa, sb] = a1_stars(inst, view);
    const OmegaInfo om = omega(inst, view);
    Solution best = candidate_t2(inst, view, om);
    // T1 joins the candidate set only for y >= 0; ties keep the precedence
    // T2 > T1 > star at a > star at b.
    const double y = monochromatic_diameter(inst).length / view.scale - 1.0;
    if (y >= 0.0) {
        Solution t1 = candidate_t1(inst);
        if (t1.length > best.length) best = std::move(t1);
    }
    if (sa.length > best.length) best = std::move(sa);
    if (sb.length > best.length) best = std::move(sb);
    return best;
}

}  // namespace lstn
