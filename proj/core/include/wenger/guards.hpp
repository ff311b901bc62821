#pragma once

namespace wenger::guards {

/// Desk-scale limits. WENGER_MAX_VERTICES, when set, overrides both.
/// Construction: graphs may hold up to this many tuples per partite set
/// (default 100000; additionally q <= 16 unless the override is set).
/// Numeric: dense eigendecompositions accept matrices up to this order
/// (default 1500).
long long max_build_tuples();
int max_numeric_order();
bool override_active();

}  // namespace wenger::guards
