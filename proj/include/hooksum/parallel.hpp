#pragma once

namespace hooksum {

// Worker count: hardware concurrency, optionally capped by the
// HOOKSUM_THREADS environment variable. Results never depend on it.
unsigned default_thread_count();

}  // namespace hooksum
