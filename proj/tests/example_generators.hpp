/*
   Copyright 2026 The hfl Authors

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

// Generator sets of the Grothendieck rings for n = 2..8, written out by hand
// in x, y, z. Every entry must map to zero in the fusion ring.

#ifndef HFL_TESTS_EXAMPLE_GENERATORS_HPP
#define HFL_TESTS_EXAMPLE_GENERATORS_HPP

#include <map>
#include <string>
#include <vector>

namespace hfl::examples {

inline const std::map<int, std::vector<std::string>>& generator_sets() {
    static const std::map<int, std::vector<std::string>> sets = {
        {2, {"y^2-1", "x^2-y^2", "zx-zy", "z-zy", "z^2-x-y-xy-1"}},
        {3, {"y^6-1", "zy^3-z", "z^2-zy^2-y^4-y"}},
        {4, {"y^4-1", "x^2-y^2", "zx-zy", "z^2-z^2y^2-y+y^3-x+xy^2", "z^3-zy^3-3yz"}},
        {5, {"y^10-1", "zy^5-z", "z^3-z^2y^3-3zy+y^4+y^9"}},
        {6, {"y^6-1", "x^2-y^2", "zx-zy", "z^3-z^3y^3-3yz+3y^4z", "z^4-z^2y^4-4yz^2+y^2+y^5+xy+xy^4"}},
        {7, {"y^14-1", "zy^7-z", "z^4-z^3y^4+3zy^5-4z^2y+y^9+y^2"}},
        {8, {"y^8-1", "x^2-y^2", "zx-zy", "z^4-z^4y^4-4z^2y+4z^2y^5-xy^5-y^6+xy+y^2",
             "z^5-z^3y^5-5z^3y+5zy^2+3zy^6"}},
    };
    return sets;
}

}  // namespace hfl::examples

#endif
