// SPDX-License-Identifier: Apache-2.0
#include "linfvd/linfvd.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "linfvd/generators.hpp"
#include "linfvd/io.hpp"
#include "linfvd/pipeline.hpp"
#include "linfvd/render.hpp"

struct linfvd_shape {
  linfvd::OrthogonalShape shape;
};

struct linfvd_result {
  linfvd::PipelineConfig config;
  linfvd::PipelineResult run;
};

namespace {

thread_local std::string last_error;

linfvd_status status_of(linfvd::ErrorCode code) {
  using linfvd::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return LINFVD_INVALID_ARGUMENT;
    case ErrorCode::MalformedDocument: return LINFVD_MALFORMED_DOCUMENT;
    case ErrorCode::DimensionMismatch: return LINFVD_DIMENSION_MISMATCH;
    case ErrorCode::NotAxisAligned: return LINFVD_NOT_AXIS_ALIGNED;
    case ErrorCode::NotClosed: return LINFVD_NOT_CLOSED;
    case ErrorCode::NonManifoldVertex: return LINFVD_NON_MANIFOLD_VERTEX;
    case ErrorCode::SelfIntersecting: return LINFVD_SELF_INTERSECTING;
    case ErrorCode::HoleOutsideOuter: return LINFVD_HOLE_OUTSIDE_OUTER;
    case ErrorCode::Degenerate: return LINFVD_DEGENERATE;
    case ErrorCode::InfeasibleSpec: return LINFVD_INFEASIBLE_SPEC;
    case ErrorCode::Io: return LINFVD_IO;
    case ErrorCode::NotAdjacent:
    case ErrorCode::MissingBvh:
    case ErrorCode::InternalInconsistency: return LINFVD_INTERNAL;
  }
  return LINFVD_INTERNAL;
}

// Runs f, translating exceptions into a status and the thread's message.
template <class F>
linfvd_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return LINFVD_OK;
  } catch (const linfvd::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LINFVD_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LINFVD_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw linfvd::Error(linfvd::ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char* linfvd_version(void) { return "1.0.0"; }

const char* linfvd_status_name(linfvd_status status) {
  switch (status) {
    case LINFVD_OK: return "ok";
    case LINFVD_INVALID_ARGUMENT: return "InvalidArgument";
    case LINFVD_MALFORMED_DOCUMENT: return "MalformedDocument";
    case LINFVD_DIMENSION_MISMATCH: return "DimensionMismatch";
    case LINFVD_NOT_AXIS_ALIGNED: return "NotAxisAligned";
    case LINFVD_NOT_CLOSED: return "NotClosed";
    case LINFVD_NON_MANIFOLD_VERTEX: return "NonManifoldVertex";
    case LINFVD_SELF_INTERSECTING: return "SelfIntersecting";
    case LINFVD_HOLE_OUTSIDE_OUTER: return "HoleOutsideOuter";
    case LINFVD_DEGENERATE: return "Degenerate";
    case LINFVD_INFEASIBLE_SPEC: return "InfeasibleSpec";
    case LINFVD_INTERNAL: return "InternalInconsistency";
    case LINFVD_IO: return "Io";
  }
  return "unknown";
}

int linfvd_status_is_validation(linfvd_status status) {
  return status >= LINFVD_MALFORMED_DOCUMENT && status <= LINFVD_DEGENERATE;
}

const char* linfvd_last_error(void) { return last_error.c_str(); }

void linfvd_string_free(char* s) { std::free(s); }

void linfvd_options_init(linfvd_options* options) {
  if (!options) return;
  options->max_depth = 32;
  options->bvh = LINFVD_BVH_AUTO;
  options->contract = 0;
  options->grid_check = 0;
}

linfvd_status linfvd_shape_from_json(const char* json, int expected_dim, linfvd_shape** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = nullptr;
    *out = new linfvd_shape{linfvd::read_shape_document(json, expected_dim)};
  });
}

linfvd_status linfvd_shape_from_file(const char* path, int expected_dim, linfvd_shape** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = nullptr;
    *out = new linfvd_shape{linfvd::read_shape_document(linfvd::read_file(path), expected_dim)};
  });
}

linfvd_status linfvd_generate(uint64_t seed, int dim, int sites, int holes, int grid,
                              linfvd_shape** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    *out = new linfvd_shape{linfvd::generate(linfvd::GenSpec{seed, dim, sites, holes, grid})};
  });
}

linfvd_status linfvd_shape_to_json(const linfvd_shape* shape, char** out) {
  return guarded([&] {
    require(shape && out, "null argument");
    *out = dup(linfvd::write_shape_document(shape->shape));
  });
}

int linfvd_shape_dimension(const linfvd_shape* shape) { return shape ? shape->shape.dim : 0; }

size_t linfvd_shape_site_count(const linfvd_shape* shape) {
  return shape ? shape->shape.sites.size() : 0;
}

size_t linfvd_shape_reflex_count(const linfvd_shape* shape) {
  if (!shape) return 0;
  size_t n = 0;
  for (const auto& c : shape->shape.corners) n += c.reflex;
  return n;
}

int linfvd_shape_hole_count(const linfvd_shape* shape) { return shape ? shape->shape.hole_count() : 0; }

void linfvd_shape_free(linfvd_shape* shape) { delete shape; }

linfvd_status linfvd_compute(const linfvd_shape* shape, const linfvd_options* options,
                             linfvd_result** out) {
  return guarded([&] {
    require(shape && out, "null argument");
    *out = nullptr;
    linfvd_options o;
    linfvd_options_init(&o);
    if (options) o = *options;
    auto r = std::make_unique<linfvd_result>();
    r->config.max_depth = o.max_depth;
    switch (o.bvh) {
      case LINFVD_BVH_AUTO: r->config.bvh = linfvd::BvhMode::Auto; break;
      case LINFVD_BVH_ON: r->config.bvh = linfvd::BvhMode::On; break;
      case LINFVD_BVH_OFF: r->config.bvh = linfvd::BvhMode::Off; break;
      default: require(false, "unknown bvh mode");
    }
    r->config.contract = o.contract != 0;
    require(o.grid_check == 0 || o.grid_check >= 2, "grid check resolution must be 0 or at least 2");
    r->config.grid_check = o.grid_check;
    r->run = linfvd::run_pipeline(shape->shape, r->config);
    *out = r.release();
  });
}

size_t linfvd_result_node_count(const linfvd_result* r) { return r ? r->run.output.nodes.size() : 0; }
size_t linfvd_result_edge_count(const linfvd_result* r) { return r ? r->run.output.edges.size() : 0; }
size_t linfvd_result_cell_count(const linfvd_result* r) { return r ? r->run.tree.cells.size() : 0; }

size_t linfvd_result_grid_violations(const linfvd_result* r) {
  return r && r->run.grid ? r->run.grid->violations.size() : 0;
}

double linfvd_result_seconds(const linfvd_result* r) { return r ? r->run.seconds : 0.0; }

linfvd_status linfvd_result_graph_json(const linfvd_result* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup(linfvd::write_graph_document(r->run.output, r->run.unit->scale, r->config.contract));
  });
}

linfvd_status linfvd_result_stats_json(const linfvd_result* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup(linfvd::stats_document(r->run, r->config));
  });
}

linfvd_status linfvd_result_summary(const linfvd_result* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup(linfvd::summary_line(r->run));
  });
}

linfvd_status linfvd_result_svg(const linfvd_result* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    if (r->run.input.dim != 2) {
      throw linfvd::Error(linfvd::ErrorCode::DimensionMismatch, "SVG output needs a 2D shape");
    }
    *out = dup(linfvd::render_svg(r->run.output, r->run.input));
  });
}

linfvd_status linfvd_result_obj(const linfvd_result* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup(linfvd::render_obj(r->run.output));
  });
}

void linfvd_result_free(linfvd_result* result) { delete result; }

}  // extern "C"
