#include <doctest.h>

#include <bit>

#include "oracles.hpp"
#include "vcgroup/error.hpp"
#include "vcgroup/sampling.hpp"
#include "vcgroup/set_system.hpp"

using namespace vcgroup;

namespace {

std::vector<std::uint32_t> masks_of(const std::vector<Trace>& traces) {
  std::vector<std::uint32_t> out;
  for (const Trace& t : traces) out.push_back(t.mask);
  return out;
}

std::vector<bool> as_bools(const Subset& s) {
  std::vector<bool> out(s.universe());
  s.for_each([&](Element x) { out[x] = true; });
  return out;
}

std::size_t floor_log2(std::size_t n) { return std::bit_width(n) - 1; }

}  // namespace

TEST_CASE("left translates") {
  const FiniteGroup c5 = make_cyclic(5);
  const Subset a(5, {0, 1});
  CHECK(left_translate(c5, c5.identity(), a) == a);
  CHECK(left_translate(c5, 2, a) == Subset(5, {2, 3}));

  const FiniteGroup d3 = make_dihedral(3);
  CHECK(left_translate(d3, 4, Subset(6, {d3.identity()})) == Subset(6, {4}));
  CHECK_THROWS_AS(left_translate(c5, 1, Subset(6)), Error);
}

TEST_CASE("restriction") {
  const FiniteGroup c4 = make_cyclic(4);
  const auto f = TranslateFamily::left_translates(c4, Subset(4, {0, 1}));
  CHECK(masks_of(restriction(f, Subset(4))) == std::vector<std::uint32_t>{0});
  CHECK(masks_of(restriction(f, Subset(4, {0, 1}))) ==
        std::vector<std::uint32_t>{0b00, 0b01, 0b10, 0b11});

  const auto full = TranslateFamily::left_translates(make_cyclic(5), Subset::full(5));
  CHECK(masks_of(restriction(full, Subset(5, {1, 3, 4}))) == std::vector<std::uint32_t>{7});

  const auto wide = TranslateFamily::left_translates(make_cyclic(40), Subset(40, {0}));
  CHECK_THROWS_AS(restriction(wide, Subset::full(40)), Error);
}

TEST_CASE("shattering") {
  const FiniteGroup c4 = make_cyclic(4);
  const auto f = TranslateFamily::left_translates(c4, Subset(4, {0, 1}));
  CHECK(is_shattered(f, Subset(4)));
  CHECK(is_shattered(f, Subset(4, {0, 1})));
  CHECK_FALSE(is_shattered(f, Subset(4, {0, 2})));
}

TEST_CASE("cut out") {
  const FiniteGroup c5 = make_cyclic(5);
  const auto f = TranslateFamily::left_translates(c5, Subset(5, {0, 1}));
  CHECK(cuts_out(f, Subset(5), Subset(5)));
  CHECK(cuts_out(f, Subset(5, {0, 1}), Subset(5, {0})));

  const auto full = TranslateFamily::left_translates(c5, Subset::full(5));
  CHECK_FALSE(cuts_out(full, Subset(5, {0, 1}), Subset(5, {0})));

  try {
    cuts_out(f, Subset(5, {0}), Subset(5, {1}));
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition);
  }
}

TEST_CASE("vc dimension examples") {
  const FiniteGroup c5 = make_cyclic(5);
  CHECK(vc_dim(TranslateFamily::left_translates(c5, Subset(5))) == 0);
  CHECK(vc_dim(TranslateFamily::left_translates(c5, Subset::full(5))) == 0);
  CHECK(vc_dim(TranslateFamily::left_translates(make_dihedral(4), Subset(8))) == 0);
  CHECK(vc_dim(TranslateFamily::left_translates(c5, Subset(5, {0, 1}))) == 2);
  CHECK(oracle::brute_vc(oracle::translate_masks(c5, {true, true, false, false, false}), 5) ==
        2);

  const auto c4 = TranslateFamily::left_translates(make_cyclic(4), Subset(4, {0, 1}));
  CHECK(vc_dim_naive(c4) == 2);
  const auto c3 = TranslateFamily::left_translates(make_cyclic(3), Subset(3, {0}));
  CHECK(vc_dim_naive(c3) == 1);
  CHECK(vc_dim(c3) == 1);
  CHECK(vc_dim_naive(TranslateFamily::left_translates(make_dihedral(5), Subset(10))) == 0);

  CHECK_THROWS_AS(vc_dim_naive(TranslateFamily::left_translates(make_cyclic(25), Subset(25))),
                  Error);
  try {
    vc_dim(TranslateFamily::from_members(4, {}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::undefined_family);
  }
}

TEST_CASE("vc search returns a shattered witness") {
  const FiniteGroup g = make_cyclic(64);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SeededRng rng(seed);
    const Subset a = bernoulli_subset(g, 0.5, rng);
    const auto f = TranslateFamily::left_translates(g, a);
    const VcResult r = vc_search(f);
    REQUIRE(r.witness.size() == r.dimension);
    CHECK(is_shattered(f, Subset(64, r.witness)));
    CHECK(r.dimension <= floor_log2(64));
  }
}

TEST_CASE("node limit raises a resource error") {
  const FiniteGroup g = make_cyclic(256);
  SeededRng rng(3);
  const auto f = TranslateFamily::left_translates(g, bernoulli_subset(g, 0.5, rng));
  try {
    vc_search(f, {10});
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::resource);
  }
}

TEST_CASE("search, exhaustive scan and brute force agree") {
  const std::vector<FiniteGroup> groups = {
      make_cyclic(6),        make_cyclic(11),       make_cyclic(16),
      make_dihedral(4),      make_dihedral(6),      make_group("C2xC2xC3"),
      make_group("D3xC2"),   make_group("C4xC4"),   make_cyclic(20)};
  std::size_t checked = 0;
  for (const FiniteGroup& g : groups) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      SeededRng rng = SeededRng::for_trial(99, g.order(), seed);
      const double p = 0.2 + 0.05 * static_cast<double>(seed % 8);
      const Subset a = bernoulli_subset(g, p, rng);
      const auto f = TranslateFamily::left_translates(g, a);
      const std::size_t expected = oracle::brute_vc(oracle::translate_masks(g, as_bools(a)),
                                                    g.order());
      CAPTURE(g.descriptor());
      CAPTURE(a.to_hex());
      CHECK(vc_dim(f) == expected);
      CHECK(vc_dim_naive(f) == expected);
      ++checked;
    }
  }
  CHECK(checked == groups.size() * 12);
}

TEST_CASE("explicit families use the unanchored search") {
  // Random families of random sets, not translate families.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SeededRng rng(seed);
    const std::size_t n = 10;
    const std::size_t m = 3 + rng.next_below(20);
    std::vector<Subset> members;
    std::vector<std::uint32_t> masks;
    for (std::size_t i = 0; i < m; ++i) {
      Subset s(n);
      for (Element x = 0; x < n; ++x) {
        if (rng.next_unit() < 0.5) s.insert(x);
      }
      masks.push_back(oracle::to_mask(s));
      members.push_back(std::move(s));
    }
    const auto f = TranslateFamily::from_members(n, members);
    CHECK(vc_dim(f) == oracle::brute_vc(masks, n));
  }
}

TEST_CASE("shattering is downward closed") {
  const FiniteGroup g = make_dihedral(8);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SeededRng rng(seed);
    const auto f = TranslateFamily::left_translates(g, bernoulli_subset(g, 0.5, rng));
    const VcResult r = vc_search(f);
    const std::vector<Element>& w = r.witness;
    for (std::uint32_t sub = 0; sub < (1u << w.size()); ++sub) {
      Subset u(g.order());
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (sub >> i & 1) u.insert(w[i]);
      }
      CHECK(is_shattered(f, u));
    }
  }
}

TEST_CASE("restriction size is bounded") {
  const FiniteGroup g = make_group("C3xC5");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SeededRng rng(seed);
    const Subset a = bernoulli_subset(g, 0.4, rng);
    const auto f = TranslateFamily::left_translates(g, a);
    auto distinct = f.members();
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const Subset u = bernoulli_subset(g, 0.3, rng);
    CHECK(restriction(f, u).size() <=
          std::min(distinct.size(), std::size_t{1} << u.count()));
  }
}

TEST_CASE("sisask family") {
  const FiniteGroup c5 = make_cyclic(5);
  const auto single = sisask_family(c5, Subset(5, {0}));
  CHECK(single.members() == std::vector<Subset>{Subset(5, {0})});

  auto members = sisask_family(c5, Subset(5, {0, 1})).members();
  std::sort(members.begin(), members.end());
  std::vector<Subset> expected = {Subset(5, {0, 1}), Subset(5, {1}), Subset(5, {0})};
  std::sort(expected.begin(), expected.end());
  CHECK(members == expected);

  CHECK(sisask_family(c5, Subset::full(5)).members() == std::vector<Subset>{Subset::full(5)});
  try {
    sisask_family(c5, Subset(5));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition);
  }
}

TEST_CASE("sisask family changes the dimension by at most one") {
  for (const char* desc : {"C13", "D5", "C2xC6"}) {
    const FiniteGroup g = make_group(desc);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      SeededRng rng(seed);
      Subset a = bernoulli_subset(g, 0.5, rng);
      if (a.empty()) a.insert(0);
      const auto t = static_cast<long>(vc_dim(TranslateFamily::left_translates(g, a)));
      const auto s = static_cast<long>(vc_dim(sisask_family(g, a)));
      CHECK(std::abs(t - s) <= 1);
    }
  }
}

TEST_CASE("repeated members do not change the result") {
  // {0,2} in C4 is fixed by translation by 2, so each translate appears twice.
  const auto f = TranslateFamily::left_translates(make_cyclic(4), Subset(4, {0, 2}));
  CHECK(f.member_count() == 4);
  CHECK(vc_dim(f) == vc_dim_naive(f));
  CHECK(vc_dim(f) == 1);
}
