// Copyright 2026 The lalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "lalc/classify.hpp"
#include "lalc/dyadic.hpp"
#include "lalc/engine.hpp"
#include "lalc/exact_scalar.hpp"
#include "lalc/gates.hpp"
#include "lalc/lambda_subst.hpp"
#include "lalc/oracle.hpp"
#include "lalc/rule.hpp"
#include "lalc/rules.hpp"
#include "lalc/scalar_eval.hpp"
#include "lalc/session.hpp"
#include "lalc/syntax.hpp"
#include "lalc/term.hpp"
#include "lalc/term_ops.hpp"
