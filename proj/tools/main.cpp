// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/cli.hpp"

int main(int argc, char** argv) { return refbit::run_cli(argc, argv); }
