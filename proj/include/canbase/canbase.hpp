#ifndef CANBASE_CANBASE_HPP
#define CANBASE_CANBASE_HPP

#include "canbase/basic_sets.hpp"
#include "canbase/coxeter.hpp"
#include "canbase/cyclo.hpp"
#include "canbase/hecke.hpp"
#include "canbase/kl.hpp"
#include "canbase/laurent.hpp"
#include "canbase/multipartition.hpp"
#include "canbase/partition.hpp"
#include "canbase/rsk.hpp"
#include "canbase/version.hpp"
#include "canbase/weyl_type.hpp"

#endif
