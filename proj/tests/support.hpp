#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "hypermonad/error.hpp"

namespace hmtest {

/** Runs fn, which must throw Error; returns the code it carried. */
template <typename Fn>
hypermonad::errc error_code(Fn&& fn) {
  try {
    fn();
  } catch (const hypermonad::Error& e) {
    return e.code();
  }
  FAIL("expected an Error to be thrown");
  return hypermonad::errc::io_error;
}

}  // namespace hmtest
