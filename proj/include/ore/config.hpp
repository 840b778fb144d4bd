#pragma once

// Expensive self-verification (product oracle, pi recursion cross-check,
// division round-trip) runs only in builds without NDEBUG.
#ifdef NDEBUG
#define ORE_DEBUG_CHECKS 0
#else
#define ORE_DEBUG_CHECKS 1
#endif
