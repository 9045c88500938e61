#include <doctest.h>

#include "dualbraid/resolution.hpp"

using namespace dualbraid;

namespace {

struct Fixture {
  CoxeterGroup g;
  NCLattice L;
  ReflOrdering ord;
  PositiveComplex C;
  DualMonoid M;
  Resolution R;
  explicit Fixture(const std::string& spec)
      : g(GroupSpec::parse(spec)), L(g), ord(sorting_order(g, L)), C(L, ord),
        M(L), R(M, C) {}
  ReflId r(const std::string& nm) const { return reflection_by_name(g, nm); }
};

}  // namespace

TEST_CASE("boundary of a vertex: d_0(b (x) {t}) = (b t) (x) {}") {
  Fixture f("A3:1,2,3");
  for (int t = 0; t < f.g.num_reflections(); ++t) {
    int fid = f.C.face_id({t});
    MonoidElt b = f.M.atom(f.r("(1,2)"));
    FreeModElement img = f.R.boundary_basis(b, fid);
    REQUIRE(img.size() == 1);
    const auto& [key, coef] = *img.begin();
    CHECK(coef == 1);
    CHECK(key.second == 0);  // the empty face
    CHECK(MonoidElt{key.first, 2} == f.M.multiply(b, f.M.atom(t)));
  }
}

TEST_CASE("the A3 edge boundary from the defining formula") {
  Fixture f("A3:1,2,3");
  // f = {(1,3) > (1,2)}: d_1(1 (x) f) = t13 (x) {(1,2)} - t23 (x) {(1,3)}
  int fid = f.C.face_id({f.r("(1,3)"), f.r("(1,2)")});
  REQUIRE(fid >= 0);
  FreeModElement img = f.R.boundary_basis(MonoidElt{}, fid);
  FreeModElement expect;
  expect[{f.M.atom(f.r("(1,3)")).nf, f.C.face_id({f.r("(1,2)")})}] = 1;
  expect[{f.M.atom(f.r("(2,3)")).nf, f.C.face_id({f.r("(1,3)")})}] = -1;
  CHECK(img == expect);
}

TEST_CASE("d^2 = 0 on basis elements") {
  for (const char* name : {"A3:1,2,3", "B3:1,3,2"}) {
    Fixture f(name);
    std::vector<MonoidElt> bs{f.M.identity_elt()};
    for (auto& m : f.M.elements_of_degree(1)) bs.push_back(m);
    for (auto& m : f.M.elements_of_degree(2)) bs.push_back(m);
    for (const MonoidElt& b : bs)
      for (int fid = 0; fid < f.C.num_faces(); ++fid) {
        int j = f.C.dim_of(fid);
        if (j < 1) continue;
        FreeModElement once = f.R.boundary_basis(b, fid);
        FreeModElement twice = f.R.boundary(j - 1, once);
        CHECK(twice.empty());
      }
  }
}

TEST_CASE("boundary rejects a homological index mismatch") {
  Fixture f("A3:1,2,3");
  FreeModElement x;
  x[{f.M.identity_elt().nf, f.C.face_id({f.r("(1,2)")})}] = 1;
  CHECK_THROWS_AS(f.R.boundary(1, x), std::invalid_argument);
}

TEST_CASE("theta_check on the spec examples") {
  Fixture f("A3:1,2,3");
  // b = c: the whole complex
  ThetaReport rc = f.R.theta_check(f.M.garside_element());
  CHECK(rc.pass);
  CHECK(rc.gcd_nc == f.L.top());
  auto fpoly = f.C.f_polynomial();
  for (std::size_t k = 0; k < fpoly.size(); ++k)
    CHECK(rc.dims[k] == fpoly[k]);
  // b = an atom: length-1 complex
  ThetaReport ra = f.R.theta_check(f.M.atom(f.r("(1,2)")));
  CHECK(ra.pass);
  CHECK(ra.dims == std::vector<int>{1, 1, 0, 0});
  // b = t12 t12, degree 2 with gcd (1,2)
  MonoidElt b =
      f.M.multiply(f.M.atom(f.r("(1,2)")), f.M.atom(f.r("(1,2)")));
  ThetaReport rb = f.R.theta_check(b);
  CHECK(rb.pass);
  CHECK(rb.gcd_nc == f.L.atom_index(f.r("(1,2)")));
  CHECK_THROWS_AS(f.R.theta_check(f.M.identity_elt()), std::invalid_argument);
  // degree <= 3, exhaustively
  for (int d = 1; d <= 3; ++d)
    for (const MonoidElt& m : f.M.elements_of_degree(d))
      CHECK(f.R.theta_check(m).pass);
}

TEST_CASE("graded exactness") {
  Fixture a3("A3:1,2,3");
  ExactnessReport rep = a3.R.graded_exactness(4);
  CHECK(rep.pass);
  CHECK(rep.minimal);
  CHECK(rep.theta_split);
  CHECK(rep.euler_ok);
  CHECK(rep.d_squared_zero);
  // slice dimensions at the augmentation tie out with the growth series
  auto growth = a3.M.growth_series(4);
  CHECK(growth == std::vector<Int>{1, 6, 26, 101, 376});
  for (const auto& p : rep.positions) {
    CHECK(p.exact);
    if (p.position == -1) CHECK(Int(p.dim) == growth[p.degree]);
  }
  // degree 1: dim A_1 = |T|, exactness forced at the augmentation
  bool saw_d1 = false;
  for (const auto& p : rep.positions)
    if (p.degree == 1 && p.position == -1) {
      saw_d1 = true;
      CHECK(p.dim == a3.g.num_reflections());
      CHECK(p.rank_in == p.dim);
    }
  CHECK(saw_d1);

  Fixture b3("B3:1,2,3");
  ExactnessReport rb = b3.R.graded_exactness(3);
  CHECK(rb.pass);
  CHECK(rb.minimal);
}
