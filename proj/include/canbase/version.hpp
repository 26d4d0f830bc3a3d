#ifndef CANBASE_VERSION_HPP
#define CANBASE_VERSION_HPP

#define CANBASE_VERSION "1.0.0"

#endif
