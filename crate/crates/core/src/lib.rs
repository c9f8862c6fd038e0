#![cfg_attr(all(not(feature = "std"), not(test)), no_std)]
extern crate alloc;
