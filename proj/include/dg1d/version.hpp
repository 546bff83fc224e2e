// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DG1D_VERSION_HPP
#define DG1D_VERSION_HPP

namespace dg1d {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace dg1d

#endif
