#include <doctest.h>

#include <random>

#include "uvlab/kernels.hpp"
#include "uvlab/poset.hpp"

using namespace uvlab;

namespace {

// Random reflexive-transitive-antisymmetric successor rows.
std::vector<Mask> random_up_rows(int n, std::mt19937_64& rng) {
  std::vector<Mask> up(n);
  for (int i = 0; i < n; ++i) up[i] = Mask{1} << i;
  std::uniform_int_distribution<int> coin(0, 3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) == 0) up[i] |= Mask{1} << j;
  // transitive closure; the i<j orientation keeps it antisymmetric
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Mask row = up[i];
      for (int j : mask_elems(row)) row |= up[j];
      if (row != up[i]) {
        up[i] = row;
        changed = true;
      }
    }
  }
  return up;
}

void compare_kernels(const kernels::Kernel& a, const kernels::Kernel& b,
                     const std::vector<Mask>& up,
                     const std::vector<Mask>& candidates) {
  int n = static_cast<int>(up.size());
  std::size_t count = candidates.size();
  std::vector<Mask> outa(count), outb(count);
  std::vector<std::uint8_t> fa(count), fb(count);

  a.cl_le(up.data(), n, candidates.data(), outa.data(), count);
  b.cl_le(up.data(), n, candidates.data(), outb.data(), count);
  REQUIRE(outa == outb);
  a.int_le(up.data(), n, candidates.data(), outa.data(), count);
  b.int_le(up.data(), n, candidates.data(), outb.data(), count);
  REQUIRE(outa == outb);
  a.neg_le(up.data(), n, candidates.data(), outa.data(), count);
  b.neg_le(up.data(), n, candidates.data(), outb.data(), count);
  REQUIRE(outa == outb);
  a.upset_flags(up.data(), n, candidates.data(), fa.data(), count);
  b.upset_flags(up.data(), n, candidates.data(), fb.data(), count);
  REQUIRE(fa == fb);
  a.ro_upset_flags(up.data(), n, candidates.data(), fa.data(), count);
  b.ro_upset_flags(up.data(), n, candidates.data(), fb.data(), count);
  REQUIRE(fa == fb);
}

}  // namespace

TEST_CASE("scalar kernel matches the direct definitions") {
  std::mt19937_64 rng(7);
  const auto& k = kernels::scalar_kernel();
  for (int n : {1, 2, 3, 5, 8}) {
    std::vector<Mask> up = random_up_rows(n, rng);
    Poset p = poset_from_up_rows(up);
    for (Mask u = 0; u < (Mask{1} << n); ++u) {
      Mask cl = 0, in = 0, ng = 0;
      for (int x = 0; x < n; ++x) {
        bool some = false, all = true, none = true;
        for (int y : mask_elems(up[x])) {
          bool hit = mask_has(u, y);
          some |= hit;
          all &= hit;
          none &= !hit;
        }
        cl |= Mask{some} << x;
        in |= Mask{all} << x;
        ng |= Mask{none} << x;
      }
      Mask got;
      k.cl_le(up.data(), n, &u, &got, 1);
      CHECK(got == cl);
      k.int_le(up.data(), n, &u, &got, 1);
      CHECK(got == in);
      k.neg_le(up.data(), n, &u, &got, 1);
      CHECK(got == ng);
      // the regular-open-upset flag against the textbook formula
      std::uint8_t flag;
      k.ro_upset_flags(up.data(), n, &u, &flag, 1);
      bool upset = true;
      for (int x : mask_elems(u)) upset &= mask_subset(up[x], u);
      Mask intcl = int_le(p, cl_le(p, u));
      CHECK((flag != 0) == (upset && intcl == u));
    }
  }
}

TEST_CASE("avx2 kernel agrees with the scalar reference") {
  const kernels::Kernel* simd = kernels::avx2_kernel();
  if (!simd) return;  // hardware without AVX2: nothing to compare

  std::mt19937_64 rng(42);
  // exhaustive candidates for small carriers
  for (int n : {1, 2, 4, 6, 8, 10}) {
    std::vector<Mask> up = random_up_rows(n, rng);
    std::vector<Mask> candidates;
    for (Mask u = 0; u < (Mask{1} << n); ++u) candidates.push_back(u);
    compare_kernels(kernels::scalar_kernel(), *simd, up, candidates);
  }
  // random candidates for wide carriers, including ragged tails
  for (int n : {17, 33, 63}) {
    std::vector<Mask> up = random_up_rows(n, rng);
    std::uniform_int_distribution<Mask> pick(0, full_mask(n));
    for (std::size_t count : {1u, 2u, 3u, 4u, 5u, 1001u}) {
      std::vector<Mask> candidates(count);
      for (auto& c : candidates) c = pick(rng);
      compare_kernels(kernels::scalar_kernel(), *simd, up, candidates);
    }
  }
}

TEST_CASE("kernel selection") {
  kernels::select("scalar");
  CHECK(std::string(kernels::active().name) == "scalar");
  if (kernels::avx2_available()) {
    kernels::select("avx2");
    CHECK(std::string(kernels::active().name) == "avx2");
  } else {
    CHECK_THROWS(kernels::select("avx2"));
  }
  CHECK_THROWS(kernels::select("never-heard-of-it"));
  // restore the default for the rest of the suite
  kernels::select(kernels::avx2_available() ? "avx2" : "scalar");
}
