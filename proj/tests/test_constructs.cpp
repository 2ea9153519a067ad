#include <cmath>

#include "doctest.h"
#include "strongq/certificates.hpp"
#include "strongq/families.hpp"
#include "strongq/pattern.hpp"
#include "strongq/spectra.hpp"
#include "strongq/strong_properties.hpp"

using namespace strongq;

TEST_CASE("corpus loads with all claims verified") {
  auto corpus = load_corpus();
  CHECK(corpus.size() >= 9);
  for (const char* id : {"exstar", "exdistinctnoSSP", "SMPnotSAP", "bowtie", "htree",
                         "campstool", "longy", "threesun", "J3"})
    CHECK_NOTHROW(find_certificate(corpus, id));

  const Certificate& htree = find_certificate(corpus, "htree");
  CHECK(htree.claims.q == 4);
  CHECK(htree.graph == h_tree());

  const Certificate& bowtie = find_certificate(corpus, "bowtie");
  CHECK(bowtie.matrix.radicand() == 6);

  const Certificate& smpnotsap = find_certificate(corpus, "SMPnotSAP");
  CHECK(smpnotsap.claims.sap == true);
  CHECK(smpnotsap.claims.smp == false);
  REQUIRE(smpnotsap.claims.spectrum.has_value());
  CHECK(smpnotsap.claims.spectrum->values.size() == 2);
}

TEST_CASE("corpus integrity failures are loud") {
  auto corpus = load_corpus();
  Certificate broken = find_certificate(corpus, "J3");
  broken.claims.q = 3;  // wrong on purpose
  CHECK_THROWS_AS(verify_certificate(broken), CorpusIntegrityError);

  Certificate wrong_pattern = find_certificate(corpus, "J3");
  wrong_pattern.graph = path_graph(3);
  CHECK_THROWS_AS(verify_certificate(wrong_pattern), CorpusIntegrityError);
}

TEST_CASE("certificate JSON round-trips") {
  auto corpus = load_corpus();
  for (const auto& cert : corpus) {
    Certificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(back.id == cert.id);
    CHECK(back.graph == cert.graph);
    CHECK(back.matrix == cert.matrix);
    CHECK_NOTHROW(verify_certificate(back));
  }
}

TEST_CASE("flipped cycle certificates") {
  Certificate f4 = flipped_cycle(4);
  CHECK(f4.claims.q == 2);
  CHECK(f4.claims.ssp == true);
  SpectralData sd4 = eig_cluster(f4.matrix.to_double());
  REQUIRE(sd4.eigenvalues.size() == 2);
  CHECK(sd4.eigenvalues[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(sd4.eigenvalues[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(sd4.multiplicities == std::vector<int>{2, 2});

  Certificate f5 = flipped_cycle(5);
  CHECK(f5.claims.q == 3);
  CHECK(f5.claims.smp == true);
  CHECK(f5.claims.ssp == false);
  REQUIRE(f5.witness.has_value());  // X = C^2 + (C^2)^T

  Certificate f7 = flipped_cycle(7);
  CHECK(f7.claims.q == 4);
  SpectralData sd7 = eig_cluster(f7.matrix.to_double());
  CHECK(sd7.eigenvalues.front() == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(sd7.multiplicities.front() == 1);  // odd n: singleton at -2

  CHECK_THROWS_AS(flipped_cycle(2), DomainError);
}

TEST_CASE("flipped cycle invariants across the desk range") {
  for (int n = 3; n <= 12; ++n) {
    Certificate c = flipped_cycle(n);  // construction re-verifies all claims
    CHECK(*c.claims.q == (n + 1) / 2);
    CHECK(pattern_of(c.matrix) == cycle_graph(n));
    if (n >= 5) {
      REQUIRE(c.witness.has_value());
      CHECK(witness_is_valid(c.matrix, c.graph, StrongProperty::SSP, *c.witness));
    }
  }
}

TEST_CASE("diag_distinct certificates") {
  Certificate one = diag_distinct({ExactScalar(1)});
  CHECK(one.claims.q == 1);

  Certificate four = diag_distinct({ExactScalar(0), ExactScalar(1), ExactScalar(2),
                                    ExactScalar(3)});
  CHECK(four.claims.ssp == true);
  CHECK(four.graph.edge_count() == 0);

  CHECK_THROWS_AS(diag_distinct({ExactScalar(1), ExactScalar(1)}), DistinctnessError);
}

TEST_CASE("direct sum certificates propagate claims only for disjoint spectra") {
  auto corpus = load_corpus();
  const Certificate& j3 = find_certificate(corpus, "J3");

  // J3 (+) (J3 + 5I): spectra {0,0,3} and {5,5,8}
  Certificate j3_shift = j3;
  j3_shift.id = "J3+5I";
  j3_shift.matrix = j3.matrix + (ExactScalar(5) * ExactMatrix::identity(3));
  j3_shift.claims = Claims{};
  j3_shift.claims.ssp = true;
  j3_shift.claims.smp = true;
  j3_shift.claims.q = 2;
  verify_certificate(j3_shift);

  Certificate sum = certificate_direct_sum(j3, j3_shift);
  CHECK(sum.claims.ssp == true);
  CHECK(sum.claims.q == 4);
  CHECK(verify_by_definition(sum.matrix, sum.graph, StrongProperty::SSP).verdict);

  // star (+) diag(7): q = 3 + 1
  const Certificate& star = find_certificate(corpus, "exstar");
  Certificate d7 = diag_distinct({ExactScalar(7)});
  Certificate sum2 = certificate_direct_sum(star, d7);
  CHECK(sum2.claims.ssp == true);
  CHECK(sum2.claims.q == 4);
  CHECK(verify_by_definition(sum2.matrix, sum2.graph, StrongProperty::SSP).verdict);

  // shared spectrum: strong claims are dropped, not an error
  Certificate dup = certificate_direct_sum(j3, j3);
  CHECK_FALSE(dup.claims.ssp.has_value());
  CHECK_FALSE(dup.claims.smp.has_value());
  CHECK(dup.claims.q == 2);
}
