#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <unistd.h>

#include "birkhoff/io.hpp"

using namespace birkhoff;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / ("birkhoff_io_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("matrix files round-trip exactly") {
    TempDir tmp;
    const ComplexMatrix x = xu_from_unitary(haar_unitary(4, 77), 5).matrix();
    MatrixMetadata meta;
    meta.seed = 77;
    meta.generator = "haar_xu";
    save_matrix(tmp.file("m.json"), x, meta);

    MatrixMetadata back;
    const ComplexMatrix y = load_matrix(tmp.file("m.json"), &back);
    REQUIRE(y.rows() == 5);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            CHECK(y(r, c).real() == x(r, c).real()); // bit-exact after one round trip
            CHECK(y(r, c).imag() == x(r, c).imag());
        }
    CHECK(back.seed == 77);
    CHECK(back.generator == "haar_xu");
}

TEST_CASE("decomposition files reload and re-verify") {
    TempDir tmp;
    struct Case {
        Decomposition d;
        ComplexMatrix x;
    };
    const XuMatrix x9 = xu_from_unitary(haar_unitary(8, 5), 9);
    const XuMatrix x5 = xu_from_unitary(haar_unitary(4, 5), 5);
    const XuMatrix x4 = xu_from_unitary(haar_unitary(3, 5), 4);
    const Case cases[] = {
        {decompose_strategy2(x9, epicirculant_group(Prime(3), 2)), x9.matrix()},
        {decompose_strategy1(x5, supercirculant_group(Prime(5))), x5.matrix()},
        {decompose_strategy2(x4, symmetric_group(4)), x4.matrix()},
        {decompose_structural(x9), x9.matrix()},
    };
    int idx = 0;
    for (const Case& c : cases) {
        const std::string path = tmp.file(("d" + std::to_string(idx++) + ".json").c_str());
        const VerifyReport before = verify(c.d, c.x);
        save_decomposition(path, c.d, before);
        const Decomposition back = load_decomposition(path);
        REQUIRE(back.terms.size() == c.d.terms.size());
        CHECK(back.group == c.d.group);
        CHECK(back.strategy == c.d.strategy);
        CHECK(back.group_order == c.d.group_order);
        CHECK(back.t_choice == c.d.t_choice);
        for (size_t i = 0; i < back.terms.size(); ++i) {
            CHECK(back.terms[i].weight == c.d.terms[i].weight); // exact doubles
            CHECK(back.terms[i].element.perm == c.d.terms[i].element.perm);
            CHECK(back.terms[i].element.label.index() == c.d.terms[i].element.label.index());
        }
        const VerifyReport after = verify(back, c.x);
        CHECK(after.pass == before.pass);
        CHECK(after.residual == before.residual);
        CHECK(after.nonzero_count == before.nonzero_count);
    }
}

TEST_CASE("parse failures are reported") {
    TempDir tmp;
    CHECK_THROWS_AS(load_matrix(tmp.file("missing.json")), std::runtime_error);

    std::ofstream(tmp.file("junk.json")) << "not json";
    CHECK_THROWS_AS(load_matrix(tmp.file("junk.json")), std::runtime_error);

    std::ofstream(tmp.file("wrong.json")) << R"({"kind":"something_else","n":1,"entries":[[[1,0]]]})";
    CHECK_THROWS_AS(load_matrix(tmp.file("wrong.json")), std::runtime_error);

    save_matrix(tmp.file("m.json"), ComplexMatrix::identity(2));
    CHECK_THROWS_AS(load_decomposition(tmp.file("m.json")), std::runtime_error);

    CHECK_THROWS_AS(save_matrix((tmp.path / "no_dir" / "x.json").string(), ComplexMatrix::identity(2)),
                    std::runtime_error);
}
