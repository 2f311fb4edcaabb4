namespace lfun { }
