#include "burling.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "burling/burling_set.hpp"
#include "burling/errors.hpp"
#include "burling/frames.hpp"
#include "burling/generator.hpp"
#include "burling/io.hpp"
#include "burling/mis.hpp"
#include "burling/oracles.hpp"
#include "burling/recognition.hpp"
#include "burling/svg.hpp"

struct burling_graph {
  burling::Graph value;
};

struct burling_set {
  burling::BurlingSet value;
};

struct burling_frames {
  burling::FrameFamily value;
};

namespace {

thread_local std::string last_error;

template <typename F>
burling_status guard(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const burling::InputError& e) {
    last_error = e.what();
    return BURLING_ERR_INPUT;
  } catch (const burling::ContractError& e) {
    last_error = e.what();
    return BURLING_ERR_CONTRACT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BURLING_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BURLING_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return BURLING_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw burling::InputError(std::string(what) + " must not be null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Handle, typename Value>
Handle* wrap(Value&& value) {
  return new Handle{std::forward<Value>(value)};
}

burling_status write_set(const burling::IndependentSet& s, uint32_t* members, size_t* member_count, int64_t* total) {
  std::copy(s.members.begin(), s.members.end(), members);
  *member_count = s.members.size();
  *total = s.weight;
  return BURLING_OK;
}

}  // namespace

extern "C" {

const char* burling_last_error(void) { return last_error.c_str(); }

void burling_string_free(char* s) { std::free(s); }

burling_status burling_graph_parse(const char* text, burling_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap<burling_graph>(burling::parse_graph(text));
    return BURLING_OK;
  });
}

burling_status burling_graph_create(size_t n, const uint32_t* edges, size_t edge_count, burling_graph** out) {
  return guard([&] {
    require(out, "out");
    if (edge_count > 0) require(edges, "edges");
    std::vector<burling::Edge> list;
    list.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = wrap<burling_graph>(burling::Graph(n, list));
    return BURLING_OK;
  });
}

size_t burling_graph_vertex_count(const burling_graph* g) { return g ? g->value.vertex_count() : 0; }

size_t burling_graph_edge_count(const burling_graph* g) { return g ? g->value.edge_count() : 0; }

int burling_graph_equal(const burling_graph* a, const burling_graph* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

void burling_graph_free(burling_graph* g) { delete g; }

burling_status burling_set_parse_json(const char* json, burling_set** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = wrap<burling_set>(burling::parse_burling_set(json));
    return BURLING_OK;
  });
}

burling_status burling_set_to_json(const burling_set* b, char** out) {
  return guard([&] {
    require(b, "set");
    require(out, "out");
    *out = copy_string(burling::burling_set_to_json(b->value));
    return BURLING_OK;
  });
}

size_t burling_set_size(const burling_set* b) { return b ? b->value.size() : 0; }

int burling_set_equal(const burling_set* a, const burling_set* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

burling_status burling_set_verify(const burling_set* b, char** report) {
  return guard([&] {
    require(b, "set");
    burling::AxiomReport r = burling::verify_axioms(b->value);
    if (report) *report = copy_string(r.describe(b->value));
    return r.ok() ? BURLING_OK : BURLING_NEGATIVE;
  });
}

burling_status burling_set_graph(const burling_set* b, burling_graph** out) {
  return guard([&] {
    require(b, "set");
    require(out, "out");
    *out = wrap<burling_graph>(burling::induced_graph(b->value));
    return BURLING_OK;
  });
}

void burling_set_free(burling_set* b) { delete b; }

burling_status burling_recognize(const burling_graph* g, burling_set** out, size_t* subproblems) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    burling::RecognitionStats stats;
    auto b = burling::recognize(g->value, &stats);
    if (subproblems) *subproblems = stats.subproblems;
    if (!b) return BURLING_NEGATIVE;
    *out = wrap<burling_set>(std::move(*b));
    return BURLING_OK;
  });
}

burling_status burling_oracle_recognize(const burling_graph* g, burling_set** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    auto b = burling::exhaustive_recognize(g->value);
    if (!b) return BURLING_NEGATIVE;
    *out = wrap<burling_set>(std::move(*b));
    return BURLING_OK;
  });
}

burling_status burling_frames_build(const burling_set* b, int linear, burling_frames** out) {
  return guard([&] {
    require(b, "set");
    require(out, "out");
    burling::AxiomReport r = burling::verify_axioms(b->value);
    if (!r.ok()) throw burling::InputError("not a Burling set:\n" + r.describe(b->value));
    *out = wrap<burling_frames>(burling::build_frames(b->value, linear != 0));
    return BURLING_OK;
  });
}

burling_status burling_frames_parse_json(const char* json, burling_frames** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = wrap<burling_frames>(burling::parse_frames(json));
    return BURLING_OK;
  });
}

burling_status burling_frames_to_json(const burling_frames* f, char** out) {
  return guard([&] {
    require(f, "frames");
    require(out, "out");
    *out = copy_string(burling::frames_to_json(f->value));
    return BURLING_OK;
  });
}

burling_status burling_frames_to_svg(const burling_frames* f, char** out) {
  return guard([&] {
    require(f, "frames");
    require(out, "out");
    *out = copy_string(burling::render_svg(f->value));
    return BURLING_OK;
  });
}

size_t burling_frames_size(const burling_frames* f) { return f ? f->value.size() : 0; }

burling_status burling_frames_verify(const burling_frames* f, char** report) {
  return guard([&] {
    require(f, "frames");
    burling::StrictReport r = burling::verify_strict(f->value);
    if (report) *report = copy_string(r.describe(f->value));
    return r.ok() ? BURLING_OK : BURLING_NEGATIVE;
  });
}

burling_status burling_frames_extract(const burling_frames* f, burling_set** out) {
  return guard([&] {
    require(f, "frames");
    require(out, "out");
    *out = wrap<burling_set>(burling::extract_burling(f->value));
    return BURLING_OK;
  });
}

burling_status burling_frames_graph(const burling_frames* f, burling_graph** out) {
  return guard([&] {
    require(f, "frames");
    require(out, "out");
    *out = wrap<burling_graph>(burling::intersection_graph(f->value));
    return BURLING_OK;
  });
}

void burling_frames_free(burling_frames* f) { delete f; }

burling_status burling_weights_parse(const burling_graph* g, const char* text, int64_t* weights) {
  return guard([&] {
    require(g, "graph");
    require(text, "text");
    require(weights, "weights");
    std::vector<std::string> names;
    for (size_t v = 0; v < g->value.vertex_count(); ++v) names.push_back(std::to_string(v));
    auto w = burling::parse_weights(text, names);
    std::copy(w.begin(), w.end(), weights);
    return BURLING_OK;
  });
}

burling_status burling_mis(const burling_graph* g, const int64_t* weights, uint32_t* members, size_t* member_count,
                           int64_t* total) {
  return guard([&] {
    require(g, "graph");
    require(weights, "weights");
    require(members, "members");
    require(member_count, "member_count");
    require(total, "total");
    const size_t n = g->value.vertex_count();
    auto s = burling::max_weight_independent_set(g->value, {weights, n});
    if (!s) return BURLING_NEGATIVE;
    return write_set(*s, members, member_count, total);
  });
}

burling_status burling_oracle_mis(const burling_graph* g, const int64_t* weights, uint32_t* members,
                                  size_t* member_count, int64_t* total) {
  return guard([&] {
    require(g, "graph");
    require(weights, "weights");
    require(members, "members");
    require(member_count, "member_count");
    require(total, "total");
    const size_t n = g->value.vertex_count();
    return write_set(burling::brute_force_mwis(g->value, {weights, n}), members, member_count, total);
  });
}

burling_status burling_generate(size_t size, uint64_t seed, burling_set** out) {
  return guard([&] {
    require(out, "out");
    burling::GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.target_size = size;
    *out = wrap<burling_set>(burling::gen_burling(cfg));
    return BURLING_OK;
  });
}

}  // extern "C"
