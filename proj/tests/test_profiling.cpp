#include <doctest.h>

#include <algorithm>

#include "fairsel/error.hpp"
#include "fairsel/profiling.hpp"
#include "fixtures.hpp"

using namespace fairsel;

TEST_CASE("encode_gender marks women as the protected group") {
  CHECK(encode_gender(Gender::Female, WeightMode::Boolean) == 1.0);
  CHECK(encode_gender(Gender::Male, WeightMode::Boolean) == 0.0);
  CHECK(encode_gender(Gender::Female, WeightMode::Continuous) == doctest::Approx(0.73));
  CHECK(encode_gender(Gender::Male, WeightMode::Continuous) == doctest::Approx(0.27));
}

TEST_CASE("encode_ethnicity treats every non-White category as protected") {
  const ReferenceTables& t = fixtures::tables();
  CHECK(encode_ethnicity(Ethnicity::White, WeightMode::Boolean, t) == 0.0);
  CHECK(encode_ethnicity(Ethnicity::Black, WeightMode::Boolean, t) == 1.0);
  CHECK(encode_ethnicity(Ethnicity::Asian, WeightMode::Boolean, t) == 1.0);
  CHECK(encode_ethnicity(Ethnicity::White, WeightMode::Continuous, t) == doctest::Approx(0.2954));
  CHECK(encode_ethnicity(Ethnicity::Black, WeightMode::Continuous, t) == doctest::Approx(0.9295));
  CHECK(encode_ethnicity(Ethnicity::Hispanic, WeightMode::Continuous, t) ==
        doctest::Approx(0.9281));
  CHECK(encode_ethnicity(Ethnicity::Other, WeightMode::Continuous, t) == doctest::Approx(0.74));
}

TEST_CASE("encode_ethnicity surfaces a missing table entry") {
  ReferenceTables t = fixtures::tables();
  t.ethnicity_weights.erase("Black");
  try {
    encode_ethnicity(Ethnicity::Black, WeightMode::Continuous, t);
    FAIL("expected MissingCategory");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingCategory);
  }
}

TEST_CASE("encode_career_stage splits professor ranks from junior positions") {
  const ReferenceTables& t = fixtures::tables();
  CHECK(encode_career_stage(CareerStage::DistinguishedProfessor, WeightMode::Boolean, t) == 0.0);
  CHECK(encode_career_stage(CareerStage::Professor, WeightMode::Boolean, t) == 0.0);
  CHECK(encode_career_stage(CareerStage::AssociateProfessor, WeightMode::Boolean, t) == 0.0);
  CHECK(encode_career_stage(CareerStage::AssistantOrLecturer, WeightMode::Boolean, t) == 1.0);
  CHECK(encode_career_stage(CareerStage::PostdocOrFellow, WeightMode::Boolean, t) == 1.0);
  CHECK(encode_career_stage(CareerStage::GraduateStudent, WeightMode::Boolean, t) == 1.0);
  CHECK(encode_career_stage(CareerStage::DistinguishedProfessor, WeightMode::Continuous, t) ==
        doctest::Approx(0.17));
  CHECK(encode_career_stage(CareerStage::AssociateProfessor, WeightMode::Continuous, t) ==
        doctest::Approx(0.50));
  CHECK(encode_career_stage(CareerStage::GraduateStudent, WeightMode::Continuous, t) ==
        doctest::Approx(1.0));
}

TEST_CASE("rank_split_value computes median and mean over the pool") {
  CHECK(rank_split_value({10, 200, 350}, RankSplit::Median) == doctest::Approx(200.0));
  CHECK(rank_split_value({40, 10, 30, 20}, RankSplit::Median) == doctest::Approx(25.0));
  CHECK(rank_split_value({7}, RankSplit::Median) == doctest::Approx(7.0));
  CHECK(rank_split_value({10, 20, 30, 40}, RankSplit::Mean) == doctest::Approx(25.0));
  CHECK(rank_split_value({1, 1, 100}, RankSplit::Mean) == doctest::Approx(34.0));
  try {
    rank_split_value({}, RankSplit::Median);
    FAIL("expected EmptyPool");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyPool);
  }
}

TEST_CASE("encode_university_rank flags ranks strictly above the split") {
  const std::vector<int> pool = {10, 200, 350};
  CHECK(encode_university_rank(350, pool, WeightMode::Boolean) == 1.0);
  CHECK(encode_university_rank(200, pool, WeightMode::Boolean) == 0.0);
  CHECK(encode_university_rank(10, pool, WeightMode::Boolean) == 0.0);
  CHECK(encode_university_rank(350, pool, WeightMode::Continuous) == doctest::Approx(1.0));
  CHECK(encode_university_rank(10, pool, WeightMode::Continuous) == doctest::Approx(10.0 / 350.0));
}

TEST_CASE("encode_university_rank honors the mean split variant") {
  const std::vector<int> pool = {1, 1, 100};
  CHECK(encode_university_rank(100, pool, WeightMode::Boolean, RankSplit::Mean) == 1.0);
  CHECK(encode_university_rank(1, pool, WeightMode::Boolean, RankSplit::Mean) == 0.0);
}

TEST_CASE("encode_university_rank rejects empty pools and out-of-pool ranks") {
  try {
    encode_university_rank(10, {}, WeightMode::Boolean);
    FAIL("expected EmptyPool");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyPool);
  }
  try {
    encode_university_rank(0, {10, 20}, WeightMode::Boolean);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  try {
    encode_university_rank(30, {10, 20}, WeightMode::Continuous);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("encode_geolocation derives continuous weight from development index") {
  const ReferenceTables& t = fixtures::tables();
  CHECK(encode_geolocation("Norway", std::nullopt, WeightMode::Continuous, t) ==
        doctest::Approx(1.0 - 0.957));
  CHECK(encode_geolocation("India", std::nullopt, WeightMode::Continuous, t) ==
        doctest::Approx(1.0 - 0.645));
  CHECK(encode_geolocation("USA", std::string("California"), WeightMode::Continuous, t) ==
        doctest::Approx(1.0 - 0.926));
}

TEST_CASE("encode_geolocation boolean flags developing countries and EPSCoR states") {
  const ReferenceTables& t = fixtures::tables();
  CHECK(encode_geolocation("India", std::nullopt, WeightMode::Boolean, t) == 1.0);
  CHECK(encode_geolocation("Germany", std::nullopt, WeightMode::Boolean, t) == 0.0);
  CHECK(encode_geolocation("USA", std::string("Arkansas"), WeightMode::Boolean, t) == 1.0);
  CHECK(encode_geolocation("USA", std::string("California"), WeightMode::Boolean, t) == 0.0);
}

TEST_CASE("encode_geolocation rejects unknown countries and stateless US authors") {
  const ReferenceTables& t = fixtures::tables();
  try {
    encode_geolocation("Atlantis", std::nullopt, WeightMode::Boolean, t);
    FAIL("expected UnknownCountry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownCountry);
  }
  try {
    encode_geolocation("Atlantis", std::nullopt, WeightMode::Continuous, t);
    FAIL("expected UnknownCountry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownCountry);
  }
  try {
    encode_geolocation("USA", std::nullopt, WeightMode::Boolean, t);
    FAIL("expected MissingState");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingState);
  }
}

TEST_CASE("build_author_profiles composes all five encoders per author") {
  const Dataset d = fixtures::three_paper_pool();
  const auto profiles = build_author_profiles(d, fixtures::tables());
  REQUIRE(profiles.size() == 3);

  const AuthorProfile& a1 = profiles.at("a1");
  CHECK(a1.boolean == FeatureVector{0.0, 0.0, 0.0, 0.0, 0.0});
  CHECK(a1.continuous.gender == doctest::Approx(0.27));
  CHECK(a1.continuous.ethnicity == doctest::Approx(0.2954));
  CHECK(a1.continuous.career_stage == doctest::Approx(0.33));
  CHECK(a1.continuous.university_rank == doctest::Approx(100.0 / 800.0));
  CHECK(a1.continuous.geolocation == doctest::Approx(1.0 - 0.947));
  CHECK(a1.h_index == 30);

  const AuthorProfile& a2 = profiles.at("a2");
  CHECK(a2.boolean == FeatureVector{1.0, 1.0, 1.0, 1.0, 1.0});
  CHECK(a2.continuous.gender == doctest::Approx(0.73));
  CHECK(a2.continuous.university_rank == doctest::Approx(1.0));

  const AuthorProfile& a3 = profiles.at("a3");
  CHECK(a3.boolean == FeatureVector{0.0, 1.0, 1.0, 0.0, 1.0});
  CHECK(a3.continuous.university_rank == doctest::Approx(0.5));
  CHECK(a3.continuous.geolocation == doctest::Approx(1.0 - 0.926));

  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    CHECK(a3.protected_membership[i] == (a3.boolean[i] == 1.0));
  }
}

TEST_CASE("collect_pool_ranks lists one rank per author") {
  const Dataset d = fixtures::three_paper_pool();
  std::vector<int> ranks = collect_pool_ranks(d);
  std::sort(ranks.begin(), ranks.end());
  CHECK(ranks == std::vector<int>{100, 400, 800});
}
