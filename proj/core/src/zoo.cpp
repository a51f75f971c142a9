// placeholder translation unit; filled in as the module lands
