readme.py
