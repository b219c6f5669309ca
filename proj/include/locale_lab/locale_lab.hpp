#pragma once

#include "element_set.hpp"
#include "errors.hpp"
#include "fault_injection.hpp"
#include "frame.hpp"
#include "poset.hpp"
#include "frame_io.hpp"
#include "sublocale.hpp"
#include "assembly.hpp"
#include "structures.hpp"
#include "interior.hpp"
#include "localic_map.hpp"
#include "space.hpp"
#include "omega_chain.hpp"
#include "classify.hpp"
#include "theorems.hpp"
#include "dot.hpp"
