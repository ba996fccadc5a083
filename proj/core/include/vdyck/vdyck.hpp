// Copyright 2026 The vdyck Authors
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

#include "vdyck/bigint.hpp"
#include "vdyck/bijection.hpp"
#include "vdyck/dyck.hpp"
#include "vdyck/eco.hpp"
#include "vdyck/error.hpp"
#include "vdyck/genfunc.hpp"
#include "vdyck/perm.hpp"
#include "vdyck/prodmat.hpp"
