pub mod algebra;
pub mod bounds;
pub mod budget;
pub mod cli;
pub mod codes;
pub mod error;
pub mod families;
pub mod insdel;
pub mod listdecode;
pub mod lrc;
pub mod oracle;
pub mod covering;
