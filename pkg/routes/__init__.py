# routes/__init__.py
# Just to make this a package
