#pragma once

#include <gtest/gtest.h>

#include <functional>

#include <dyncurve/error.hpp>

// Kind of the CurveError thrown by f; records a failure if none is thrown.
inline dyncurve::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const dyncurve::CurveError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no CurveError thrown";
  return dyncurve::ErrorKind::ParameterError;
}
