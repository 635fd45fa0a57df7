#include "test_util.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace index3d;

namespace {

const std::vector<std::string>& two_tet_census() {
    static const std::vector<std::string> sigs{"cMcabbgds", "cMcabbgij", "cMcabbgik", "cPcbbbalm", "cPcbbbali",
                                               "cPcbbbadh", "cPcbbbadu", "cPcbbbdxm", "cPcbbbiht", "cPcbbbdei"};
    return sigs;
}

}  // namespace

TEST(Perm, S4TableIsLexicographicAndComplete) {
    const auto& table = s4_table();
    EXPECT_EQ(table[0], kIdentityPerm);
    EXPECT_EQ(table[23], (Perm{3, 2, 1, 0}));
    for (std::size_t i = 0; i + 1 < table.size(); ++i) EXPECT_LT(table[i], table[i + 1]);
    for (std::size_t i = 0; i < table.size(); ++i) EXPECT_EQ(s4_index(table[i]), static_cast<int>(i));
}

TEST(Perm, ComposeInverseAndSign) {
    Perm p{1, 2, 0, 3};
    EXPECT_EQ(compose(p, inverse(p)), kIdentityPerm);
    EXPECT_EQ(perm_sign(p), 1);
    EXPECT_EQ(perm_sign(Perm{1, 0, 2, 3}), -1);
}

TEST(IsoSig, CensusRoundTripsAndValidates) {
    std::set<std::string> seen;
    for (const auto& sig : two_tet_census()) {
        Triangulation t = decode_isosig(sig);
        EXPECT_EQ(t.size(), 2);
        EXPECT_NO_THROW(validate(t));
        EXPECT_EQ(encode_isosig(t), sig);
        seen.insert(encode_isosig(t));
    }
    EXPECT_EQ(seen.size(), 10u);
}

TEST(IsoSig, RelabellingDoesNotChangeSignature) {
    Triangulation t = decode_isosig("dLQacccbjkg");
    Triangulation r = t.relabelled({2, 0, 1}, {Perm{1, 0, 3, 2}, Perm{3, 1, 2, 0}, Perm{0, 2, 3, 1}});
    EXPECT_NO_THROW(validate(r));
    EXPECT_EQ(encode_isosig(r), "dLQacccbjkg");
}

TEST(IsoSig, MalformedInput) {
    EXPECT_THROW(decode_isosig(""), MalformedSignature);
    EXPECT_THROW(decode_isosig("c!cbbbiht"), MalformedSignature);
    EXPECT_THROW(decode_isosig("cPcbbb"), MalformedSignature);
}

TEST(Triangulation, FigureEightStructure) {
    Triangulation t = decode_isosig("cPcbbbiht");
    auto ec = edge_classes(t);
    ASSERT_EQ(ec.classes.size(), 2u);
    EXPECT_EQ(ec.degree(0), 6u);
    EXPECT_EQ(ec.degree(1), 6u);
    int cusps = 0;
    vertex_classes(t, &cusps);
    EXPECT_EQ(cusps, 1);
    EXPECT_EQ(vertex_link_euler(t), std::vector<long long>{0});
    EXPECT_EQ(triangles(t).size(), 4u);
    EXPECT_TRUE(orientation(t).has_value());
}

TEST(Triangulation, EdgeRowsSumToTwicePerTetrahedron) {
    for (const auto& sig : two_tet_census()) {
        IntMatrix E = edge_equation_matrix(decode_isosig(sig));
        ASSERT_EQ(E.rows(), 2u) << sig;
        for (std::size_t j = 0; j < E.cols(); ++j) EXPECT_EQ(E(0, j) + E(1, j), 2) << sig;
    }
}

TEST(Triangulation, ValidateRejectsOpenFace) {
    Triangulation t = decode_isosig("cPcbbbiht");
    t.gluing(0, 0) = FaceGluing{};
    EXPECT_THROW(validate(t), InvalidTriangulation);
}
