#pragma once

namespace atomfiber {

struct Options {
  // Canonical scheduling of completion candidates. Result sets are canonical
  // either way; turning this off merely lets batched runs keep a coarser
  // intermediate generator order.
  bool deterministic = true;
  int threads = 1;
  // Abort any single completion after this many generated elements.
  long long limit = 1'000'000;
  // Cap on memoized minimal-element sets per matrix; 0 = unbounded.
  long long cache_cap = 0;
};

} // namespace atomfiber
