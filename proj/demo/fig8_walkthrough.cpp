// Walks through the figure-eight knot complement: decode, gluing data,
// angle structures, 1-efficiency, the index at a few peripheral classes and
// a 2-3 move that leaves the index unchanged.
#include "index3d/index3d.hpp"

#include <iostream>

using namespace index3d;

int main() {
    Triangulation t = decode_isosig("cPcbbbiht");
    std::cout << "isoSig " << encode_isosig(t) << ", " << t.size() << " tetrahedra, "
              << edge_classes(t).classes.size() << " edges\n";

    GluingData g = load_gluing_file(std::string(INDEX3D_DATA_DIR) + "/fig8.glu");
    std::cout << "edge rows:";
    for (const auto& e : g.edge_rows) std::cout << " [" << render_quad(e) << "]";
    std::cout << "\nmeridian [" << render_quad(g.meridian(0)) << "], longitude [" << render_quad(g.longitude(0))
              << "]\n";

    auto strict = strict_exists_vanishing_holonomy(g);
    if (auto* s = std::get_if<StrictAngles>(&strict))
        std::cout << "strict angle structure: " << render_angles(s->alpha) << "\n";

    EfficiencyReport rep = efficiency_report(g);
    std::cout << "closed: " << to_string(rep.verdict_closed) << ", spun: " << to_string(rep.verdict_spun) << "\n";

    QuadVector klein{0, 0, 2, 0, 1, 0};
    std::cout << "Klein bottle class [" << render_quad(klein) << "]: chi = " << to_string(chi(g, klein))
              << ", boundary = " << boundary(g, klein)[0] << " mu + " << boundary(g, klein)[1] << " lambda\n";

    const HalfInt order = HalfInt::from_int(8);
    IndexResult zero = index(IndexRequest{g, {}, order, {}});
    std::cout << "I(0)        = " << zero.series.to_text() << "  [" << to_string(zero.verdict) << ", "
              << zero.terms_included << " terms]\n";
    for (const auto& [x, y] : std::vector<std::pair<std::string, std::string>>{{"2", "0"}, {"0", "1"}, {"0", "1/2"}}) {
        auto r = index_peripheral(g, {HalfInt::parse(x), HalfInt::parse(y)}, order);
        std::cout << "I(" << x << "mu+" << y << "lambda) = " << r.series.to_text() << "\n";
    }

    InvarianceResult inv = invariance_check(t, MoveSpec::from_table(0), HalfInt::from_int(5));
    std::cout << "after 2-3 on triangle 0: " << encode_isosig(apply_move(t, MoveSpec::from_table(0)))
              << ", I0(0) " << (inv.status == InvarianceResult::Status::Equal ? "unchanged" : "changed") << "\n";
}
