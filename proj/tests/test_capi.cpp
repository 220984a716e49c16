#include "doctest.h"

#include "liereps/liereps.h"

#include <string>

TEST_CASE("C API round trip") {
  lr_input* in = nullptr;
  REQUIRE(lr_input_parse(R"({"A": [[2]], "Acheck": [[1]], "F0": [[1]]})", &in) == LR_OK);
  lr_report* r = nullptr;
  REQUIRE(lr_analyze(in, "5", nullptr, 0, &r) == LR_OK);
  CHECK(std::string(lr_report_total(r)) == "5");
  CHECK(lr_report_ok(r) == 1);
  CHECK(std::string(lr_report_json(r)).find("\"total\": \"5\"") != std::string::npos);
  CHECK(std::string(lr_report_text(r)).find("total 5") != std::string::npos);
  lr_report_free(r);

  const char* samples[] = {"3", "4"};
  REQUIRE(lr_analyze(in, nullptr, samples, 2, &r) == LR_OK);
  CHECK(std::string(lr_report_total(r)).empty());
  lr_report_free(r);

  REQUIRE(lr_enumerate(in, "3", 10, &r) == LR_OK);
  CHECK(std::string(lr_report_total(r)) == "3");
  lr_report_free(r);
  lr_input_free(in);
}

TEST_CASE("C API error codes") {
  lr_input* in = nullptr;
  CHECK(lr_input_parse("{\"A\": [[2]", &in) == LR_ERR_USAGE);
  CHECK(std::string(lr_last_error()).find("line 1") != std::string::npos);
  CHECK(in == nullptr);
  CHECK(lr_input_parse(nullptr, &in) == LR_ERR_USAGE);
  CHECK(lr_input_load("/nonexistent/file.json", &in) == LR_ERR_USAGE);

  REQUIRE(lr_input_parse(R"({"A": [[2]], "Acheck": [[1]], "F0": [[1]]})", &in) == LR_OK);
  lr_report* r = nullptr;
  CHECK(lr_analyze(in, "6", nullptr, 0, &r) == LR_ERR_VALIDATION);
  CHECK(lr_analyze(in, "six", nullptr, 0, &r) == LR_ERR_USAGE);
  CHECK(r == nullptr);
  lr_input_free(in);

  CHECK(lr_catalog('D', 4, "HSpin", -1, "3", &r) == LR_ERR_VALIDATION);
  CHECK(lr_catalog('A', 2, "nonsense", 1, "3", &r) == LR_ERR_USAGE);
  REQUIRE(lr_catalog('A', 2, "adjoint", 1, "7", &r) == LR_OK);
  CHECK(std::string(lr_report_total(r)) == "51");
  lr_report_free(r);
  CHECK(std::string(lr_version()).size() > 0);
  lr_report_free(nullptr);
  lr_input_free(nullptr);
}
