/* SPDX-License-Identifier: Apache-2.0 */
#define TROPEXT_BUILDING
#include "tropext/tropext.h"

#include "commands.hpp"
#include "error.hpp"
#include "parse.hpp"
#include "solve.hpp"

#include <cstring>

struct tropext_hyperfield {
  tropext::Hyperfield h;
};

struct tropext_poly {
  tropext::HPoly p;
};

namespace {

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tropext_status status_of(const std::exception& e) {
  using namespace tropext;
  if (dynamic_cast<const ParseError*>(&e)) return TROPEXT_ERR_PARSE;
  if (dynamic_cast<const PrecisionError*>(&e)) return TROPEXT_ERR_PRECISION;
  if (dynamic_cast<const UnsupportedError*>(&e)) return TROPEXT_ERR_UNSUPPORTED;
  if (dynamic_cast<const DomainError*>(&e)) return TROPEXT_ERR_DOMAIN;
  if (dynamic_cast<const Error*>(&e)) return TROPEXT_ERR_PARSE;  // unknown keys and literals
  if (dynamic_cast<const nlohmann::json::exception*>(&e)) return TROPEXT_ERR_ARGUMENT;
  return TROPEXT_ERR_INTERNAL;
}

template <class F>
tropext_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (...) {
    g_last_error = "unknown failure";
    return TROPEXT_ERR_INTERNAL;
  }
}

tropext_status bad_argument(const char* what) {
  g_last_error = what;
  return TROPEXT_ERR_ARGUMENT;
}

}  // namespace

extern "C" {

const char* tropext_version(void) { return "0.1.0"; }

const char* tropext_last_error(void) { return g_last_error.c_str(); }

void tropext_string_free(char* s) { std::free(s); }

tropext_status tropext_hyperfield_new(const char* key, tropext_hyperfield** out) {
  if (!key || !out) return bad_argument("null argument");
  return guarded([&] {
    *out = new tropext_hyperfield{tropext::parse_hyperfield(key)};
    return TROPEXT_OK;
  });
}

void tropext_hyperfield_free(tropext_hyperfield* h) { delete h; }

tropext_status tropext_hyperfield_key(const tropext_hyperfield* h, char** out) {
  if (!h || !out) return bad_argument("null argument");
  return guarded([&] {
    *out = dup(h->h.key());
    return TROPEXT_OK;
  });
}

tropext_status tropext_hyperfield_is_stringent(const tropext_hyperfield* h, int* out) {
  if (!h || !out) return bad_argument("null argument");
  return guarded([&] {
    *out = h->h.is_stringent() ? 1 : 0;
    return TROPEXT_OK;
  });
}

tropext_status tropext_elem_normalize(const tropext_hyperfield* h, const char* text, char** out) {
  if (!h || !text || !out) return bad_argument("null argument");
  return guarded([&] {
    *out = dup(h->h.format(tropext::parse_elem(h->h, text)));
    return TROPEXT_OK;
  });
}

tropext_status tropext_elem_add(const tropext_hyperfield* h, const char* a, const char* b, char** out) {
  if (!h || !a || !b || !out) return bad_argument("null argument");
  return guarded([&] {
    *out = dup(h->h.format(h->h.add(tropext::parse_elem(h->h, a), tropext::parse_elem(h->h, b))));
    return TROPEXT_OK;
  });
}

tropext_status tropext_poly_parse(const tropext_hyperfield* h, const char* text, size_t nvars, tropext_poly** out) {
  if (!h || !text || !out) return bad_argument("null argument");
  return guarded([&] {
    *out = new tropext_poly{tropext::parse_poly(h->h, text, nvars)};
    return TROPEXT_OK;
  });
}

void tropext_poly_free(tropext_poly* p) { delete p; }

tropext_status tropext_poly_to_string(const tropext_poly* p, char** out) {
  if (!p || !out) return bad_argument("null argument");
  return guarded([&] {
    *out = dup(p->p.to_string());
    return TROPEXT_OK;
  });
}

tropext_status tropext_poly_nvars(const tropext_poly* p, size_t* out) {
  if (!p || !out) return bad_argument("null argument");
  *out = p->p.nvars();
  return TROPEXT_OK;
}

tropext_status tropext_poly_is_root(const tropext_poly* p, const char* const* point, size_t n, int* out) {
  if (!p || (!point && n) || !out) return bad_argument("null argument");
  return guarded([&] {
    std::vector<tropext::Elem> a;
    for (size_t i = 0; i < n; ++i) a.push_back(tropext::parse_elem(p->p.hyperfield(), point[i]));
    *out = tropext::is_root(p->p, a) ? 1 : 0;
    return TROPEXT_OK;
  });
}

tropext_status tropext_poly_roots_json(const tropext_poly* p, char** out) {
  if (!p || !out) return bad_argument("null argument");
  return guarded([&] {
    tropext::json_io::json arr = tropext::json_io::json::array();
    for (const auto& r : tropext::roots_univariate(p->p)) arr.push_back(tropext::json_io::to_json(p->p.hyperfield(), r));
    *out = dup(arr.dump());
    return TROPEXT_OK;
  });
}

tropext_status tropext_run(const char* request_json, char** out) {
  if (!request_json || !out) return bad_argument("null argument");
  g_last_error.clear();
  try {
    const auto resp = tropext::run_command(tropext::json_io::json::parse(request_json));
    *out = dup(resp.dump());
    return resp["ok"].get<bool>() ? TROPEXT_OK : TROPEXT_CHECK_FAILED;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    *out = dup(tropext::error_object(e).dump());
    return status_of(e);
  }
}

}  // extern "C"
