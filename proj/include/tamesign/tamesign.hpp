/*
 * Copyright 2026 The tamesign Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "tamesign/arith.hpp"
#include "tamesign/cyclotomic.hpp"
#include "tamesign/errors.hpp"
#include "tamesign/metacyclic.hpp"
#include "tamesign/parallel.hpp"
#include "tamesign/rationality.hpp"
#include "tamesign/sign.hpp"
#include "tamesign/sign_calculus.hpp"
#include "tamesign/tame_division.hpp"
#include "tamesign/tame_weil.hpp"
