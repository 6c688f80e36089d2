// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace refbit {

/// Entry point of the refbit command-line tool. Exit codes: 0 success,
/// 1 verification failures, 2 argument or domain errors.
int run_cli(int argc, const char* const* argv);

}  // namespace refbit
