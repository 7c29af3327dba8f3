/*
   Copyright 2026 The cyclicid Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLICID_HPP
#define CYCLICID_HPP

#include "blind_recon.hpp"
#include "channel_sim.hpp"
#include "cyclic_code.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "lrs.hpp"
#include "parallel.hpp"
#include "poly2.hpp"
#include "poly_text.hpp"
#include "syndrome_dist.hpp"
#include "verify.hpp"
#include "xn1.hpp"

#endif
