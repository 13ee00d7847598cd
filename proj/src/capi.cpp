#include "kcross.h"

#include <cstring>
#include <sstream>
#include <string>

#include "kcross/constructions.hpp"
#include "kcross/family.hpp"
#include "kcross/lexkk.hpp"
#include "kcross/regimes.hpp"
#include "kcross/search.hpp"
#include "kcross/serialize.hpp"

using namespace kcross;

struct kx_family {
  Family f;
};
struct kx_pair {
  FamilyPair p;
};
struct kx_outcome {
  SearchOutcome o;
};

namespace {

thread_local std::string g_last_error;

kx_status set_error(const Error& e) {
  g_last_error = e.what();
  switch (e.code()) {
    case Errc::usage: return KX_EUSAGE;
    case Errc::precondition: return KX_EPRECOND;
    case Errc::inexact: return KX_EINEXACT;
    case Errc::invariant: return KX_EINVARIANT;
    case Errc::limit: return KX_ELIMIT;
    case Errc::parse: return KX_EPARSE;
  }
  return KX_EINVARIANT;
}

template <class Fn>
kx_status guarded(Fn&& fn) {
  try {
    fn();
    return KX_OK;
  } catch (const Error& e) {
    return set_error(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KX_EINVARIANT;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<PairCheck> parse_checks(const char* csv) {
  if (!csv) fail(Errc::usage, "null check list");
  std::vector<PairCheck> checks;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "disjoint")
      checks.push_back(PairCheck::disjoint);
    else if (item == "cross")
      checks.push_back(PairCheck::cross);
    else if (item == "star_free" || item == "star-free")
      checks.push_back(PairCheck::star_free);
    else if (item == "pyber")
      checks.push_back(PairCheck::pyber);
    else if (item == "sizes")
      checks.push_back(PairCheck::sizes);
    else
      fail(Errc::usage, "unknown check '" + item + "'");
  }
  if (checks.empty()) fail(Errc::usage, "empty check list");
  return checks;
}

}  // namespace

extern "C" {

const char* kx_version(void) { return "1.0.0"; }

const char* kx_last_error(void) { return g_last_error.c_str(); }

void kx_string_free(char* s) { std::free(s); }

/* ---- k-sets ---------------------------------------------------------- */

kx_status kx_colex_rank(const int* elems, int k, uint64_t* rank_out) {
  return guarded([&] {
    if (!elems || !rank_out || k < 1) fail(Errc::usage, "bad arguments");
    for (int i = 1; i < k; ++i)
      if (elems[i - 1] >= elems[i]) fail(Errc::usage, "elements must be strictly increasing");
    *rank_out = colex_rank(std::span<const int>(elems, static_cast<std::size_t>(k)));
  });
}

kx_status kx_colex_unrank(uint64_t rank, int k, int* elems_out) {
  return guarded([&] {
    if (!elems_out || k < 1 || k > 64) fail(Errc::usage, "bad arguments");
    if (rank >= choose64(64, k)) fail(Errc::usage, "rank exceeds C(64,k)");
    auto v = mask_to_elements(colex_unrank(rank, k));
    for (int i = 0; i < k; ++i) elems_out[i] = v[static_cast<std::size_t>(i)];
  });
}

kx_status kx_lex_compare(const int* g, const int* h, int k, int* order_out) {
  return guarded([&] {
    if (!g || !h || !order_out || k < 1) fail(Errc::usage, "bad arguments");
    auto ord = lex_compare(std::span<const int>(g, static_cast<std::size_t>(k)),
                           std::span<const int>(h, static_cast<std::size_t>(k)));
    *order_out = ord == std::strong_ordering::less ? -1 : ord == std::strong_ordering::greater ? 1 : 0;
  });
}

/* ---- families -------------------------------------------------------- */

kx_status kx_family_create(int n, int k, kx_family** out) {
  return guarded([&] {
    if (!out) fail(Errc::usage, "null out pointer");
    *out = new kx_family{Family(GroundSet(n, k))};
  });
}

void kx_family_free(kx_family* f) { delete f; }

kx_status kx_family_clone(const kx_family* f, kx_family** out) {
  return guarded([&] {
    if (!f || !out) fail(Errc::usage, "null argument");
    *out = new kx_family{f->f};
  });
}

kx_status kx_family_add(kx_family* f, const int* elems, int k) {
  return guarded([&] {
    if (!f || !elems) fail(Errc::usage, "null argument");
    if (k != f->f.k()) fail(Errc::usage, "member size differs from k");
    f->f.insert(elements_to_mask(std::span<const int>(elems, static_cast<std::size_t>(k)), f->f.n()));
  });
}

kx_status kx_family_add_rank(kx_family* f, uint64_t rank) {
  return guarded([&] {
    if (!f) fail(Errc::usage, "null argument");
    f->f.insert_rank(rank);
  });
}

int kx_family_n(const kx_family* f) { return f ? f->f.n() : 0; }
int kx_family_k(const kx_family* f) { return f ? f->f.k() : 0; }
uint64_t kx_family_size(const kx_family* f) { return f ? f->f.size() : 0; }
uint64_t kx_family_capacity(const kx_family* f) { return f ? f->f.capacity() : 0; }

int kx_family_contains(const kx_family* f, const int* elems, int k) {
  if (!f || !elems || k != f->f.k()) return 0;
  try {
    std::uint64_t mask =
        elements_to_mask(std::span<const int>(elems, static_cast<std::size_t>(k)), f->f.n());
    return f->f.contains(mask) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

kx_status kx_family_members(const kx_family* f, int* elems_out, size_t cap) {
  return guarded([&] {
    if (!f || !elems_out) fail(Errc::usage, "null argument");
    size_t need = static_cast<size_t>(f->f.size()) * static_cast<size_t>(f->f.k());
    if (cap < need) fail(Errc::usage, "output buffer too small");
    size_t i = 0;
    f->f.for_each_member([&](std::uint64_t mask, std::uint64_t) {
      for (int e : mask_to_elements(mask)) elems_out[i++] = e;
    });
  });
}

kx_status kx_family_is_intersecting(const kx_family* f, int* out) {
  return guarded([&] {
    if (!f || !out) fail(Errc::usage, "null argument");
    *out = is_intersecting(f->f) ? 1 : 0;
  });
}

kx_status kx_family_is_star(const kx_family* f, int* star_out) {
  return guarded([&] {
    if (!f || !star_out) fail(Errc::usage, "null argument");
    auto s = is_star(f->f);
    *star_out = s ? *s : 0;
  });
}

kx_status kx_family_diversity(const kx_family* f, uint64_t* out) {
  return guarded([&] {
    if (!f || !out) fail(Errc::usage, "null argument");
    *out = diversity(f->f);
  });
}

kx_status kx_family_restriction(const kx_family* f, int element, int mode, kx_family** out) {
  return guarded([&] {
    if (!f || !out) fail(Errc::usage, "null argument");
    if (mode != 0 && mode != 1) fail(Errc::usage, "mode must be 0 (contains) or 1 (avoids)");
    *out = new kx_family{
        restriction(f->f, element, mode == 0 ? RestrictionMode::contains : RestrictionMode::avoids)};
  });
}

kx_status kx_family_complement(const kx_family* f, kx_family** out) {
  return guarded([&] {
    if (!f || !out) fail(Errc::usage, "null argument");
    *out = new kx_family{complement_family(f->f)};
  });
}

kx_status kx_family_shadow(const kx_family* f, int level, kx_family** out) {
  return guarded([&] {
    if (!f || !out) fail(Errc::usage, "null argument");
    *out = new kx_family{shadow(f->f, level)};
  });
}

kx_status kx_lex_segment(int n, int t, uint64_t m, kx_family** out) {
  return guarded([&] {
    if (!out) fail(Errc::usage, "null out pointer");
    *out = new kx_family{lex_segment(n, t, m)};
  });
}

kx_status kx_lex_unrank(int n, int t, uint64_t index, int* elems_out) {
  return guarded([&] {
    if (!elems_out) fail(Errc::usage, "null out pointer");
    GroundSet g(n, t);
    auto v = mask_to_elements(lex_unrank(n, t, index));
    for (int i = 0; i < t; ++i) elems_out[i] = v[static_cast<std::size_t>(i)];
  });
}

kx_status kx_cross_intersecting(const kx_family* a, const kx_family* b, int* out) {
  return guarded([&] {
    if (!a || !b || !out) fail(Errc::usage, "null argument");
    *out = cross_intersecting(a->f, b->f) ? 1 : 0;
  });
}

kx_status kx_hilton_check(const kx_family* a, const kx_family* b, int* out) {
  return guarded([&] {
    if (!a || !b || !out) fail(Errc::usage, "null argument");
    *out = hilton_equivalent_check(a->f, b->f) ? 1 : 0;
  });
}

kx_status kx_kk_compress_check(const kx_family* a, const kx_family* b, int* out) {
  return guarded([&] {
    if (!a || !b || !out) fail(Errc::usage, "null argument");
    *out = kk_compress_check(a->f, b->f) ? 1 : 0;
  });
}

kx_status kx_max_cross_partner(int n, int a, int b, uint64_t m, uint64_t* count_out,
                               kx_family** witnesses_out) {
  return guarded([&] {
    if (!count_out) fail(Errc::usage, "null count pointer");
    if (witnesses_out) {
      Family w((GroundSet(n, b)));
      *count_out = max_cross_partner(n, a, b, m, &w);
      *witnesses_out = new kx_family{std::move(w)};
    } else {
      *count_out = max_cross_partner(n, a, b, m);
    }
  });
}

/* ---- pairs ----------------------------------------------------------- */

kx_status kx_pair_create(const kx_family* a, const kx_family* b, kx_pair** out) {
  return guarded([&] {
    if (!a || !b || !out) fail(Errc::usage, "null argument");
    if (a->f.ground() != b->f.ground())
      fail(Errc::usage, "pair requires a common ground set (n,k)");
    *out = new kx_pair{FamilyPair(a->f, b->f)};
  });
}

void kx_pair_free(kx_pair* p) { delete p; }

kx_status kx_pair_side(const kx_pair* p, int side, kx_family** out) {
  return guarded([&] {
    if (!p || !out) fail(Errc::usage, "null argument");
    if (side != 0 && side != 1) fail(Errc::usage, "side must be 0 or 1");
    *out = new kx_family{side == 0 ? p->p.a : p->p.b};
  });
}

uint64_t kx_pair_size(const kx_pair* p, int side) {
  if (!p) return 0;
  return side == 0 ? p->p.a.size() : p->p.b.size();
}

int kx_pair_n(const kx_pair* p) { return p ? p->p.a.n() : 0; }
int kx_pair_k(const kx_pair* p) { return p ? p->p.a.k() : 0; }

kx_status kx_pair_verify_json(const kx_pair* p, const char* checks, uint64_t expected_a,
                              uint64_t expected_b, char** json_out) {
  return guarded([&] {
    if (!p || !json_out) fail(Errc::usage, "null argument");
    auto parsed = parse_checks(checks);
    VerifyReport rep = verify_pair(p->p, parsed, ExpectedSizes{expected_a, expected_b});
    *json_out = dup_string(verify_report_to_json(rep).dump(2));
  });
}

kx_status kx_pair_to_json(const kx_pair* p, char** json_out) {
  return guarded([&] {
    if (!p || !json_out) fail(Errc::usage, "null argument");
    *json_out = dup_string(pair_to_string(p->p));
  });
}

kx_status kx_pair_from_json(const char* text, kx_pair** out) {
  return guarded([&] {
    if (!text || !out) fail(Errc::usage, "null argument");
    *out = new kx_pair{pair_from_string(text)};
  });
}

/* ---- constructions --------------------------------------------------- */

kx_status kx_construct(const char* name, int n, int k, kx_pair** out) {
  return guarded([&] {
    if (!name || !out) fail(Errc::usage, "null argument");
    *out = new kx_pair{construct_by_name(name, n, k)};
  });
}

/* ---- exact arithmetic & regimes -------------------------------------- */

kx_status kx_binomial(int64_t n, int64_t r, char** decimal_out) {
  return guarded([&] {
    if (!decimal_out) fail(Errc::usage, "null out pointer");
    *decimal_out = dup_string(to_decimal(binomial(n, r)));
  });
}

kx_status kx_classify_json(int64_t n, int k, char** json_out) {
  return guarded([&] {
    if (!json_out) fail(Errc::usage, "null out pointer");
    *json_out = dup_string(regime_report_to_json(classify(n, k)).dump(2));
  });
}

kx_status kx_bounds_json(int64_t n, int k, char** json_out) {
  return guarded([&] {
    if (!json_out) fail(Errc::usage, "null out pointer");
    *json_out = dup_string(bound_set_to_json(bounds(n, k)).dump(2));
  });
}

kx_status kx_theorem14_json(int k, int64_t n_max, char** json_out) {
  return guarded([&] {
    if (!json_out) fail(Errc::usage, "null out pointer");
    *json_out = dup_string(theorem14_report_to_json(theorem14_check(k, n_max)).dump(2));
  });
}

kx_status kx_thm43_threshold(int64_t n, int k, int u, char** decimal_out) {
  return guarded([&] {
    if (!decimal_out) fail(Errc::usage, "null out pointer");
    *decimal_out = dup_string(to_decimal(thm43_threshold(n, k, u)));
  });
}

kx_status kx_ineq_holds(const char* which, int64_t n, int k, int* holds_out) {
  return guarded([&] {
    if (!which || !holds_out) fail(Errc::usage, "null argument");
    *holds_out = ineq_holds(ineq_from_name(which), n, k) ? 1 : 0;
  });
}

kx_status kx_ineq_crossover_json(const char* which, int k, int64_t cap, char** json_out) {
  return guarded([&] {
    if (!which || !json_out) fail(Errc::usage, "null argument");
    *json_out = dup_string(crossover_to_json(ineq_crossover(k, ineq_from_name(which), cap)).dump(2));
  });
}

/* ---- exact search ---------------------------------------------------- */

void kx_search_options_init(kx_search_options* opts) {
  if (!opts) return;
  opts->star_free = 0;
  opts->allow_overlap = 0;
  opts->node_limit = 0;
  opts->time_limit_ms = 0;
  opts->workers = 1;
  opts->symmetry_fix = 1;
}

kx_status kx_search(int n, int k, const kx_search_options* copts, kx_outcome** out) {
  return guarded([&] {
    if (!out) fail(Errc::usage, "null out pointer");
    SearchOptions opts;
    if (copts) {
      opts.star_free = copts->star_free != 0;
      opts.allow_overlap = copts->allow_overlap != 0;
      if (copts->node_limit) opts.node_limit = copts->node_limit;
      opts.time_limit_ms = copts->time_limit_ms;
      opts.workers = copts->workers;
      opts.symmetry_fix = copts->symmetry_fix != 0;
    }
    SearchOutcome o = exact_maxmin(n, k, opts);
    bool exact = o.exact();
    *out = new kx_outcome{std::move(o)};
    if (!exact) {
      g_last_error = "budget exhausted: interval result";
      throw Error(Errc::inexact, g_last_error);  // outcome still delivered
    }
  });
}

kx_status kx_exhaustive(int n, int k, int star_free, int allow_overlap, kx_outcome** out) {
  return guarded([&] {
    if (!out) fail(Errc::usage, "null out pointer");
    *out = new kx_outcome{exhaustive_labelings(n, k, star_free != 0, allow_overlap != 0)};
  });
}

void kx_outcome_free(kx_outcome* o) { delete o; }

int kx_outcome_exact(const kx_outcome* o) { return o && o->o.exact() ? 1 : 0; }
uint64_t kx_outcome_lo(const kx_outcome* o) { return o ? o->o.lo : 0; }
uint64_t kx_outcome_hi(const kx_outcome* o) { return o ? o->o.hi : 0; }

kx_status kx_outcome_certificate(const kx_outcome* o, kx_pair** out) {
  return guarded([&] {
    if (!o || !out) fail(Errc::usage, "null argument");
    if (!o->o.certificate) {
      *out = nullptr;
      return;
    }
    *out = new kx_pair{*o->o.certificate};
  });
}

kx_status kx_outcome_json(const kx_outcome* o, char** json_out) {
  return guarded([&] {
    if (!o || !json_out) fail(Errc::usage, "null argument");
    *json_out = dup_string(outcome_to_json(o->o).dump(2));
  });
}

} /* extern "C" */
