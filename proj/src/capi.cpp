#include "liereps/liereps.h"

#include "liereps/error.hpp"
#include "liereps/report.hpp"

#include <exception>
#include <new>
#include <string>

struct lr_input {
  liereps::InputSpec spec;
};

struct lr_report {
  liereps::Report report;
};

namespace {

thread_local std::string last_error;

template <class F>
lr_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return LR_OK;
  } catch (const liereps::UsageError& e) {
    last_error = e.what();
    return LR_ERR_USAGE;
  } catch (const liereps::ValidationError& e) {
    last_error = e.what();
    return LR_ERR_VALIDATION;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LR_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LR_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return LR_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw liereps::UsageError(std::string(what) + " is null");
}

std::optional<liereps::Integer> optional_q(const char* q) {
  if (!q) return std::nullopt;
  return liereps::parse_integer(q, "q");
}

lr_status emit(liereps::Report r, lr_report** out) {
  *out = new lr_report{std::move(r)};
  return LR_OK;
}

}  // namespace

extern "C" {

const char* lr_version(void) { return "1.0.0"; }

const char* lr_last_error(void) { return last_error.c_str(); }

lr_status lr_input_parse(const char* json_text, lr_input** out) {
  return guarded([&] {
    require(json_text, "json_text");
    require(out, "out");
    *out = new lr_input{liereps::parse_input(json_text)};
  });
}

lr_status lr_input_load(const char* path, lr_input** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new lr_input{liereps::load_input(path)};
  });
}

void lr_input_free(lr_input* input) { delete input; }

lr_status lr_analyze(const lr_input* input, const char* q, const char* const* sample_q,
                     size_t n_samples, lr_report** out) {
  return guarded([&] {
    require(input, "input");
    require(out, "out");
    std::vector<liereps::Integer> samples;
    for (size_t i = 0; i < n_samples; ++i) {
      require(sample_q, "sample_q");
      require(sample_q[i], "sample_q entry");
      samples.push_back(liereps::parse_integer(sample_q[i], "sample q"));
    }
    emit(liereps::analyze(input->spec, optional_q(q), samples), out);
  });
}

lr_status lr_catalog(char type, size_t rank, const char* isogeny, int epsilon, const char* q,
                     lr_report** out) {
  return guarded([&] {
    require(isogeny, "isogeny");
    require(q, "q");
    require(out, "out");
    emit(liereps::catalog(type, rank, isogeny, epsilon, liereps::parse_integer(q, "q")), out);
  });
}

lr_status lr_enumerate(const lr_input* input, const char* q, size_t limit, lr_report** out) {
  return guarded([&] {
    require(input, "input");
    require(out, "out");
    emit(liereps::enumerate(input->spec, optional_q(q), limit), out);
  });
}

lr_status lr_selftest(unsigned flags, lr_report** out) {
  return guarded([&] {
    require(out, "out");
    emit(liereps::selftest((flags & LR_SELFTEST_CORRUPT_CATALOG) != 0), out);
  });
}

const char* lr_report_text(const lr_report* report) {
  return report ? report->report.text.c_str() : "";
}

const char* lr_report_json(const lr_report* report) {
  return report ? report->report.json.c_str() : "";
}

const char* lr_report_total(const lr_report* report) {
  return report ? report->report.total.c_str() : "";
}

int lr_report_ok(const lr_report* report) { return report && report->report.ok ? 1 : 0; }

void lr_report_free(lr_report* report) { delete report; }

}  // extern "C"
